#pragma once

// Scenario files (JSON), S-parameter CSV, and map output (CSV / plain PGM).
//
// Scenario schema, lengths in meters, angles in radians, frequency in Hz:
//
//   {
//     "medium":    {"eps_rel": 20, "sigma": 0.2, "frequency_hz": 1e9, "mu": 1.2566e-6},
//     "array":     {"n": 16, "radius_m": 0.09, "tx_angle_rad": 4.71238898038469}
//                | {"tx": [x, y], "rx": [[x, y], ...]},
//     "anomalies": [{"center_m": [0.01, 0.03], "radius_m": 0.01, "eps_rel": 55, "sigma": 1.2}],
//     "search":    {"radius_m": 0.085, "step_m": 0.002},
//     "options":   {"contrast_mode": "sigma_ratio", "field_mode": "auto",
//                   "noise": {"snr_db": 20, "seed": 7}}
//   }
//
// "mu" and "options" are optional.

#include <filesystem>
#include <string>
#include <string_view>

#include "dsm/forward.hpp"
#include "dsm/imaging.hpp"

namespace dsm {

/// Throws ParseError naming the offending field, ValidationError on invariant violations.
[[nodiscard]] Scenario parse_scenario(std::string_view json_text);
[[nodiscard]] Scenario read_scenario(const std::filesystem::path& path);

/// Header `n,re,im`, 1-based index, 17 significant digits.
[[nodiscard]] std::string format_sparams_csv(const SParamSet& s);
[[nodiscard]] SParamSet parse_sparams_csv(std::string_view text);
void write_sparams_csv(const SParamSet& s, const std::filesystem::path& path);
[[nodiscard]] SParamSet read_sparams_csv(const std::filesystem::path& path);

enum class MapFormat { csv, pgm };

/// Header `x,y,value`, one row per grid point in grid order.
[[nodiscard]] std::string format_map_csv(const IndicatorMap& map);

/// Plain P2 raster over the bounding square, north up, off-disk pixels 0,
/// values quantised as round(255 * clamp(v, 0, 1)).
[[nodiscard]] std::string format_map_pgm(const IndicatorMap& map);

/// Raster (row, column) of grid point `index` in the PGM output.
[[nodiscard]] std::pair<int, int> pgm_pixel_of(const DiskGrid& grid, std::size_t index);

void write_map(const IndicatorMap& map, const std::filesystem::path& path, MapFormat format);

struct MapSample {
    Point2 point;
    double value{0.0};
};
[[nodiscard]] std::vector<MapSample> parse_map_csv(std::string_view text);
[[nodiscard]] std::vector<MapSample> read_map_csv(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
/// Throws IoError if the directory is not writable.
void write_file_atomic(const std::filesystem::path& path, std::string_view contents);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);

}  // namespace dsm
