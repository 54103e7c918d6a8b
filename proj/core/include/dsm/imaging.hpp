#pragma once

// Direct sampling imaging: the Gamma inner product, the normalised indicator
// map, the Bessel-series structure function and peak extraction.

#include <span>
#include <string>
#include <vector>

#include "dsm/forward.hpp"
#include "dsm/grid.hpp"

namespace dsm {

enum class MapKind { dsm, analytic };

[[nodiscard]] std::string_view to_string(MapKind kind);

struct MapMetadata {
    bool lossy_approximation{false};  ///< analytic map evaluated with Re(k)
    FieldMode field_mode{FieldMode::asymptotic};
    int truncation_order{0};          ///< analytic maps only
    std::size_t near_antenna_points{0};
    std::vector<std::string> warnings;
};

struct IndicatorMap {
    DiskGrid grid;
    std::vector<double> values;
    MapKind kind{MapKind::dsm};
    std::size_t argmax{0};  ///< first index attaining the maximum
    MapMetadata metadata;

    [[nodiscard]] std::size_t size() const { return values.size(); }
    [[nodiscard]] Point2 peak_point() const { return grid.points[argmax]; }
    [[nodiscard]] double peak_value() const { return values[argmax]; }
};

/// sum_n f(n) conj(g(n)). Throws UsageError on length mismatch.
[[nodiscard]] Complex inner_product_gamma(std::span<const Complex> f, std::span<const Complex> g);

[[nodiscard]] double norm_gamma(std::span<const Complex> f);

/// Indicator |<S, E(r, .)>| / (||S|| ||E(r, .)||) on the scenario's search grid.
/// Throws DegenerateInputError for all-zero data and ValidationError on an N mismatch.
[[nodiscard]] IndicatorMap indicator_map(const SParamSet& s, const Scenario& scenario,
                                         FieldMode field_mode, ExecPolicy policy = {});

/// Smallest truncation order accepted by analytic_phi_map for this scenario:
/// ceil(Re(k) (search_radius + max |r_D|)) + 40.
[[nodiscard]] int minimum_truncation_order(const Scenario& scenario);

/// Unweighted structure function of one anomaly at r:
/// J_0(x) + (1/N) sum_n sum_{0<|m|<=M} i^m J_m(x) e^{i m (theta_n - phi)},
/// x = k_real |r - r_D|, phi the polar angle of r - r_D.
[[nodiscard]] Complex structure_function(double k_real, std::span<const double> receiver_angles,
                                         Point2 r, Point2 anomaly_center, int truncation_order);

/// |Phi| / max_grid |Phi| with Phi = sum_l rho_l^3 chi_l Phi_l. Uses Re(k) and
/// flags lossy_approximation for lossy media. Throws ConfigError if
/// truncation_order < minimum_truncation_order(scenario).
[[nodiscard]] IndicatorMap analytic_phi_map(const Scenario& scenario, int truncation_order,
                                            ExecPolicy policy = {});

struct Peak {
    std::size_t index{0};
    Point2 point;
    double value{0.0};
};

/// Local maxima (8-connected plateaus with no strictly higher neighbour) with
/// value > threshold, sorted by value descending then grid index ascending.
[[nodiscard]] std::vector<Peak> peak_extract(const IndicatorMap& map, double threshold);

/// Largest map value outside the disk of `exclusion_radius` around `center`.
[[nodiscard]] double max_outside(const IndicatorMap& map, Point2 center, double exclusion_radius);

/// Peak value over the largest value further than `exclusion_radius` from the peak.
[[nodiscard]] double peak_to_sidelobe(const IndicatorMap& map, double exclusion_radius);

}  // namespace dsm
