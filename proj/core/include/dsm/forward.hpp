#pragma once

// Born-approximation synthesis of scattered-field S-parameters.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsm/em.hpp"
#include "dsm/parallel.hpp"

namespace dsm {

struct NoiseOptions {
    double snr_db{0.0};
    std::uint64_t seed{0};
};

/// Everything needed to synthesise data and image it.
struct Scenario {
    MediumParams medium;
    AntennaArray array;
    std::vector<Anomaly> anomalies;
    double search_radius{0.085};  ///< m
    double grid_step{0.002};      ///< m
    ContrastMode contrast_mode{ContrastMode::sigma_ratio};
    std::optional<FieldMode> field_mode;  ///< empty: default_field_mode(k)
    std::optional<NoiseOptions> noise;

    /// Medium, array and search-domain invariants. Does not require anomalies.
    void validate() const;

    [[nodiscard]] FieldMode resolved_field_mode() const;
};

/// S_scat(n) for n = 1..N, stored 0-based.
struct SParamSet {
    std::vector<Complex> values;

    [[nodiscard]] std::size_t size() const { return values.size(); }
    friend bool operator==(const SParamSet&, const SParamSet&) = default;
};

/// Point-anomaly Born data:
/// S(n) = sum_l rho_l^3 (i k^2 / (4 omega mu)) chi_l E(tx, r_l) E(r_l, rx_n).
/// Throws DomainError if an anomaly centre coincides with an antenna.
/// Anomalies with rho >= lambda/2 are accepted; `warnings`, when given, collects a note.
[[nodiscard]] SParamSet synth_point(const Scenario& scenario, FieldMode field_mode,
                                    std::vector<std::string>* warnings = nullptr,
                                    ExecPolicy policy = {});

inline constexpr int kMinCellsPerWavelength = 10;

/// Midpoint quadrature of the Born integral over each disk anomaly with
/// E_tot replaced by E_inc. Radial step lambda / cells_per_wavelength on a
/// ring-and-sector mesh. Throws ConfigError below kMinCellsPerWavelength.
[[nodiscard]] SParamSet synth_extended(const Scenario& scenario, int cells_per_wavelength,
                                       FieldMode field_mode, ExecPolicy policy = {});

/// Adds circularly-symmetric complex Gaussian noise with per-entry variance
/// mean|S|^2 / 10^(snr_db/10). snr_db = +inf returns the input unchanged.
[[nodiscard]] SParamSet add_noise(const SParamSet& s, double snr_db, std::uint64_t seed);

}  // namespace dsm
