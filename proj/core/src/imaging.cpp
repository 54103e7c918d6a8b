#include "dsm/imaging.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

#include "dsm/errors.hpp"
#include "dsm/special_functions.hpp"

namespace dsm {

std::string_view to_string(MapKind kind) {
    return kind == MapKind::dsm ? "dsm" : "analytic";
}

Complex inner_product_gamma(std::span<const Complex> f, std::span<const Complex> g) {
    if (f.size() != g.size()) {
        throw UsageError("inner_product_gamma: length mismatch (" + std::to_string(f.size()) + " vs " +
                         std::to_string(g.size()) + ")");
    }
    Complex sum{};
    for (std::size_t n = 0; n < f.size(); ++n) {
        sum += f[n] * std::conj(g[n]);
    }
    return sum;
}

double norm_gamma(std::span<const Complex> f) {
    double sum = 0.0;
    for (const auto& v : f) {
        sum += std::norm(v);
    }
    return std::sqrt(sum);
}

namespace {

// The structure theorem assumes k |r - r_RX| >> 0.25; flag points below ten times that.
constexpr double kFarFromAntennaThreshold = 0.25 * 10.0;

std::size_t first_argmax(const std::vector<double>& values) {
    return static_cast<std::size_t>(std::distance(values.begin(), std::max_element(values.begin(), values.end())));
}

std::size_t count_near_antenna(const DiskGrid& grid, const AntennaArray& array, double k_real) {
    std::size_t count = 0;
    for (const auto& p : grid.points) {
        double nearest = std::numeric_limits<double>::infinity();
        for (const auto& r : array.rx) {
            nearest = std::min(nearest, distance(p, r));
        }
        if (k_real * nearest < kFarFromAntennaThreshold) {
            ++count;
        }
    }
    return count;
}

void note_near_antenna(MapMetadata& meta, const DiskGrid& grid, const AntennaArray& array, double k_real) {
    meta.near_antenna_points = count_near_antenna(grid, array, k_real);
    if (meta.near_antenna_points > 0) {
        meta.warnings.push_back(std::to_string(meta.near_antenna_points) +
                                " grid points have k*dist(r, antenna) < 2.5; far-from-antenna assumption is weak there");
    }
}

}  // namespace

IndicatorMap indicator_map(const SParamSet& s, const Scenario& scenario, FieldMode field_mode, ExecPolicy policy) {
    const auto& array = scenario.array;
    if (s.size() != array.size()) {
        throw ValidationError("S-parameter count " + std::to_string(s.size()) + " does not match array size " +
                              std::to_string(array.size()));
    }
    const double s_norm = norm_gamma(s.values);
    if (!(s_norm > 0.0)) {
        throw DegenerateInputError("indicator_map: S-parameter data are identically zero");
    }
    const Wavenumber k = wavenumber(scenario.medium);

    IndicatorMap map;
    map.kind = MapKind::dsm;
    map.grid = build_disk_grid(scenario.search_radius, scenario.grid_step);
    map.values.assign(map.grid.size(), 0.0);
    map.metadata.field_mode = field_mode;

    parallel_for(map.grid.size(), policy, [&](std::size_t begin, std::size_t end) {
        std::vector<Complex> test(array.size());
        for (std::size_t p = begin; p < end; ++p) {
            for (std::size_t n = 0; n < array.size(); ++n) {
                test[n] = incident_field(k, array.rx[n], map.grid.points[p], field_mode);
            }
            const Complex num = inner_product_gamma(s.values, test);
            map.values[p] = std::abs(num) / (s_norm * norm_gamma(test));
        }
    });
    map.argmax = first_argmax(map.values);
    note_near_antenna(map.metadata, map.grid, array, k.k.real());
    return map;
}

int minimum_truncation_order(const Scenario& scenario) {
    double reach = 0.0;
    for (const auto& a : scenario.anomalies) {
        reach = std::max(reach, norm(a.center));
    }
    const double k_real = wavenumber(scenario.medium).k.real();
    return static_cast<int>(std::ceil(k_real * (scenario.search_radius + reach))) + 40;
}

namespace {

// (1/N) sum_n e^{i m theta_n}, m = 0..M.
std::vector<Complex> array_factors(std::span<const double> angles, int order) {
    std::vector<Complex> factors(static_cast<std::size_t>(order) + 1);
    const double inv_n = 1.0 / static_cast<double>(angles.size());
    for (int m = 0; m <= order; ++m) {
        Complex sum{};
        for (double theta : angles) {
            sum += std::polar(1.0, m * theta);
        }
        factors[static_cast<std::size_t>(m)] = sum * inv_n;
    }
    return factors;
}

Complex structure_from_factors(double k_real, std::span<const Complex> factors, Point2 r, Point2 center,
                               std::vector<double>& bessel) {
    const int order = static_cast<int>(factors.size()) - 1;
    const Point2 offset = r - center;
    const double x = k_real * norm(offset);
    const double phi = angle_of(offset);
    special::bessel_j_sequence(order, x, bessel);
    // Orders +m and -m combine to 2 i^m J_m Re(C_m e^{-i m phi}).
    Complex phi_value{bessel[0], 0.0};
    Complex i_pow{1.0, 0.0};
    const Complex i_unit{0.0, 1.0};
    for (int m = 1; m <= order; ++m) {
        i_pow *= i_unit;
        const auto um = static_cast<std::size_t>(m);
        const double angular = (factors[um] * std::polar(1.0, -m * phi)).real();
        phi_value += 2.0 * bessel[um] * angular * i_pow;
    }
    return phi_value;
}

}  // namespace

Complex structure_function(double k_real, std::span<const double> receiver_angles, Point2 r, Point2 anomaly_center,
                           int truncation_order) {
    if (receiver_angles.empty()) {
        throw UsageError("structure_function: no receivers");
    }
    if (truncation_order < 0) {
        throw ConfigError("structure_function: truncation order must be non-negative");
    }
    const auto factors = array_factors(receiver_angles, truncation_order);
    std::vector<double> bessel;
    return structure_from_factors(k_real, factors, r, anomaly_center, bessel);
}

IndicatorMap analytic_phi_map(const Scenario& scenario, int truncation_order, ExecPolicy policy) {
    if (scenario.anomalies.empty()) {
        throw ValidationError("analytic_phi_map needs at least one anomaly");
    }
    const int minimum = minimum_truncation_order(scenario);
    if (truncation_order < minimum) {
        throw ConfigError("truncation order " + std::to_string(truncation_order) + " is below the safe bound " +
                          std::to_string(minimum));
    }
    const Wavenumber k = wavenumber(scenario.medium);
    const double k_real = k.k.real();
    const auto angles = scenario.array.receiver_angles();
    const auto factors = array_factors(angles, truncation_order);

    std::vector<Complex> weights;
    for (const auto& a : scenario.anomalies) {
        weights.push_back(a.radius * a.radius * a.radius * contrast(a, scenario.medium, scenario.contrast_mode));
    }

    IndicatorMap map;
    map.kind = MapKind::analytic;
    map.grid = build_disk_grid(scenario.search_radius, scenario.grid_step);
    map.values.assign(map.grid.size(), 0.0);
    map.metadata.truncation_order = truncation_order;
    map.metadata.field_mode = FieldMode::asymptotic;
    map.metadata.lossy_approximation = k.lossy();
    if (k.lossy()) {
        map.metadata.warnings.push_back("lossy medium: structure function evaluated with Re(k)");
    }

    parallel_for(map.grid.size(), policy, [&](std::size_t begin, std::size_t end) {
        std::vector<double> bessel;
        for (std::size_t p = begin; p < end; ++p) {
            Complex phi{};
            for (std::size_t l = 0; l < weights.size(); ++l) {
                phi += weights[l] * structure_from_factors(k_real, factors, map.grid.points[p],
                                                           scenario.anomalies[l].center, bessel);
            }
            map.values[p] = std::abs(phi);
        }
    });
    map.argmax = first_argmax(map.values);
    const double peak = map.values[map.argmax];
    if (!(peak > 0.0)) {
        throw DegenerateInputError("analytic_phi_map: structure function vanishes on the grid (zero contrast?)");
    }
    for (auto& v : map.values) {
        v /= peak;
    }
    note_near_antenna(map.metadata, map.grid, scenario.array, k_real);
    return map;
}

std::vector<Peak> peak_extract(const IndicatorMap& map, double threshold) {
    const auto& grid = map.grid;
    const std::size_t count = map.values.size();
    std::vector<char> visited(count, 0);
    std::vector<Peak> peaks;
    std::deque<std::size_t> queue;
    std::vector<std::size_t> plateau;

    for (std::size_t start = 0; start < count; ++start) {
        if (visited[start]) {
            continue;
        }
        const double level = map.values[start];
        bool dominated = false;
        plateau.clear();
        queue.assign(1, start);
        visited[start] = 1;
        while (!queue.empty()) {
            const std::size_t p = queue.front();
            queue.pop_front();
            plateau.push_back(p);
            const LatticeIndex node = grid.lattice[p];
            for (int dj = -1; dj <= 1; ++dj) {
                for (int di = -1; di <= 1; ++di) {
                    if (di == 0 && dj == 0) {
                        continue;
                    }
                    const auto q = grid.find({node.i + di, node.j + dj});
                    if (!q) {
                        continue;
                    }
                    const double v = map.values[*q];
                    if (v > level) {
                        dominated = true;
                    } else if (v == level && !visited[*q]) {
                        visited[*q] = 1;
                        queue.push_back(*q);
                    }
                }
            }
        }
        if (!dominated && level > threshold) {
            peaks.push_back({start, grid.points[start], level});
        }
    }
    std::stable_sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
        return a.value > b.value || (a.value == b.value && a.index < b.index);
    });
    return peaks;
}

double max_outside(const IndicatorMap& map, Point2 center, double exclusion_radius) {
    double best = 0.0;
    for (std::size_t p = 0; p < map.values.size(); ++p) {
        if (distance(map.grid.points[p], center) > exclusion_radius) {
            best = std::max(best, map.values[p]);
        }
    }
    return best;
}

double peak_to_sidelobe(const IndicatorMap& map, double exclusion_radius) {
    const double side = max_outside(map, map.peak_point(), exclusion_radius);
    if (side == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return map.peak_value() / side;
}

}  // namespace dsm
