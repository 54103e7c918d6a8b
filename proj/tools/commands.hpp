#pragma once

// Subcommands of the `dsm` tool. Each returns the process exit status and
// writes human-readable output to `out`; library errors propagate as dsm::Error.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "dsm/forward.hpp"
#include "dsm/imaging.hpp"

namespace dsm::cli {

struct SynthOptions {
    std::filesystem::path scenario;
    std::filesystem::path out;
    bool extended{false};
    int cells_per_wavelength{20};
    std::optional<double> noise_snr_db;
    std::optional<std::uint64_t> seed;
    std::optional<FieldMode> field_mode;
    ExecPolicy policy;
};

struct ImageOptions {
    std::filesystem::path scenario;
    std::optional<std::filesystem::path> sparams;
    std::filesystem::path out;
    bool analytic{false};
    double peak_threshold{0.8};
    std::optional<int> truncation_order;
    std::optional<FieldMode> field_mode;
    ExecPolicy policy;
};

struct VerifyOptions {
    std::filesystem::path scenario;
    std::optional<std::filesystem::path> sparams;
    std::vector<int> sweep_sizes;
    ExecPolicy policy;
};

struct BesselTableOptions {
    int max_order{10};
    double max_x{10.0};
    double step{0.5};
};

/// Files written by `image`: <base>.csv, <base>.pgm and <base>.report.json.
struct ImageOutputs {
    std::filesystem::path csv;
    std::filesystem::path pgm;
    std::filesystem::path report;
};

[[nodiscard]] ImageOutputs image_outputs(const std::filesystem::path& out);

int cmd_synth(const SynthOptions& opts, std::ostream& out);
int cmd_image(const ImageOptions& opts, std::ostream& out);
int cmd_verify(const VerifyOptions& opts, std::ostream& out);
int cmd_bessel_table(const BesselTableOptions& opts, std::ostream& out);

/// Thread cap from --threads, else DSM_THREADS, else 0 (hardware concurrency).
[[nodiscard]] ExecPolicy resolve_threads(std::optional<unsigned> flag);

/// Parses "4,8,16" into integers. Throws UsageError.
[[nodiscard]] std::vector<int> parse_int_list(const std::string& text);

/// Entry point shared by main() and the CLI tests.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace dsm::cli
