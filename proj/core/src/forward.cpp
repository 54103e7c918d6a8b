#include "dsm/forward.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "dsm/errors.hpp"

namespace dsm {

void Scenario::validate() const {
    medium.validate();
    array.validate();
    if (!(search_radius > 0.0)) {
        throw ValidationError("search.radius_m must be positive");
    }
    if (!(grid_step > 0.0) || !(grid_step < search_radius)) {
        throw ValidationError("search.step_m must satisfy 0 < step < radius");
    }
    if (!(search_radius < array.radius)) {
        throw ValidationError("search.radius_m must be smaller than the array radius");
    }
    for (std::size_t l = 0; l < anomalies.size(); ++l) {
        if (!(anomalies[l].radius > 0.0)) {
            throw ValidationError("anomalies[" + std::to_string(l) + "].radius_m must be positive");
        }
    }
    if (contrast_mode == ContrastMode::sigma_ratio && medium.sigma_background == 0.0) {
        throw ValidationError("options.contrast_mode \"sigma_ratio\" needs medium.sigma > 0; use \"conventional\"");
    }
}

FieldMode Scenario::resolved_field_mode() const {
    return field_mode.value_or(default_field_mode(wavenumber(medium)));
}

namespace {

Complex born_prefactor(const Wavenumber& k, const MediumParams& medium) {
    return Complex{0.0, 1.0} * k.k * k.k / (4.0 * medium.angular_frequency() * medium.mu);
}

void require_anomalies(const Scenario& scenario) {
    if (scenario.anomalies.empty()) {
        throw ValidationError("synthesis needs at least one anomaly");
    }
}

void require_off_antennas(const Scenario& scenario, Point2 p, std::size_t l) {
    auto coincide = [p](Point2 a) { return distance(a, p) == 0.0; };
    bool hit = coincide(scenario.array.tx);
    for (const auto& r : scenario.array.rx) {
        hit = hit || coincide(r);
    }
    if (hit) {
        throw DomainError("anomalies[" + std::to_string(l) + "] is centred on an antenna (singular field)");
    }
}

}  // namespace

SParamSet synth_point(const Scenario& scenario, FieldMode field_mode,
                      std::vector<std::string>* warnings, ExecPolicy policy) {
    require_anomalies(scenario);
    const Wavenumber k = wavenumber(scenario.medium);
    const Complex prefactor = born_prefactor(k, scenario.medium);
    const auto& array = scenario.array;

    // Transmitter-side factor per anomaly: rho^3 * prefactor * chi * E(tx, r_D).
    std::vector<Complex> weights;
    weights.reserve(scenario.anomalies.size());
    for (std::size_t l = 0; l < scenario.anomalies.size(); ++l) {
        const auto& a = scenario.anomalies[l];
        require_off_antennas(scenario, a.center, l);
        if (warnings != nullptr && !(a.radius < k.wavelength / 2.0)) {
            warnings->push_back("anomalies[" + std::to_string(l) +
                                "] radius is not below lambda/2; point Born model is unreliable");
        }
        const Complex chi = contrast(a, scenario.medium, scenario.contrast_mode);
        weights.push_back(a.radius * a.radius * a.radius * prefactor * chi *
                          incident_field(k, array.tx, a.center, field_mode));
    }

    SParamSet out;
    out.values.assign(array.size(), Complex{});
    parallel_for(array.size(), policy, [&](std::size_t begin, std::size_t end) {
        for (std::size_t n = begin; n < end; ++n) {
            Complex sum{};
            for (std::size_t l = 0; l < weights.size(); ++l) {
                sum += weights[l] * incident_field(k, array.rx[n], scenario.anomalies[l].center, field_mode);
            }
            out.values[n] = sum;
        }
    });
    return out;
}

namespace {

struct QuadratureCell {
    Point2 point;
    Complex tx_weight;  // cell weight * prefactor * chi * E(tx, cell)
};

std::vector<QuadratureCell> disk_cells(const Anomaly& a, const Scenario& scenario, const Wavenumber& k,
                                       Complex prefactor, int cells_per_wavelength, FieldMode mode) {
    const double target = k.wavelength / cells_per_wavelength;
    const int rings = std::max(1, static_cast<int>(std::ceil(a.radius / target)));
    const double dr = a.radius / rings;
    const int sectors = std::max(8, static_cast<int>(std::ceil(2.0 * std::numbers::pi * a.radius / dr)));
    const double dtheta = 2.0 * std::numbers::pi / sectors;
    const Complex chi = contrast(a, scenario.medium, scenario.contrast_mode);
    // rho^3 times the disk average, so a vanishing disk reproduces the point formula.
    const double scale = a.radius / std::numbers::pi;

    std::vector<QuadratureCell> cells;
    cells.reserve(static_cast<std::size_t>(rings) * static_cast<std::size_t>(sectors));
    for (int ring = 0; ring < rings; ++ring) {
        const double r = (ring + 0.5) * dr;
        const double area = r * dr * dtheta;
        for (int s = 0; s < sectors; ++s) {
            const Point2 p = a.center + polar(r, (s + 0.5) * dtheta);
            cells.push_back({p, scale * area * prefactor * chi * incident_field(k, scenario.array.tx, p, mode)});
        }
    }
    return cells;
}

}  // namespace

SParamSet synth_extended(const Scenario& scenario, int cells_per_wavelength, FieldMode field_mode,
                         ExecPolicy policy) {
    require_anomalies(scenario);
    if (cells_per_wavelength < kMinCellsPerWavelength) {
        throw ConfigError("cells per wavelength must be at least " + std::to_string(kMinCellsPerWavelength) +
                          ", got " + std::to_string(cells_per_wavelength));
    }
    const Wavenumber k = wavenumber(scenario.medium);
    const Complex prefactor = born_prefactor(k, scenario.medium);

    std::vector<QuadratureCell> cells;
    for (std::size_t l = 0; l < scenario.anomalies.size(); ++l) {
        require_off_antennas(scenario, scenario.anomalies[l].center, l);
        auto disk = disk_cells(scenario.anomalies[l], scenario, k, prefactor, cells_per_wavelength, field_mode);
        cells.insert(cells.end(), disk.begin(), disk.end());
    }

    const auto& rx = scenario.array.rx;
    SParamSet out;
    out.values.assign(rx.size(), Complex{});
    parallel_for(rx.size(), policy, [&](std::size_t begin, std::size_t end) {
        for (std::size_t n = begin; n < end; ++n) {
            Complex sum{};
            for (const auto& cell : cells) {
                sum += cell.tx_weight * incident_field(k, rx[n], cell.point, field_mode);
            }
            out.values[n] = sum;
        }
    });
    return out;
}

SParamSet add_noise(const SParamSet& s, double snr_db, std::uint64_t seed) {
    if (std::isnan(snr_db) || snr_db == -std::numeric_limits<double>::infinity()) {
        throw DomainError("add_noise: snr_db must be finite or +inf");
    }
    if (snr_db == std::numeric_limits<double>::infinity() || s.values.empty()) {
        return s;
    }
    double power = 0.0;
    for (const auto& v : s.values) {
        power += std::norm(v);
    }
    power /= static_cast<double>(s.values.size());
    const double sigma = std::sqrt(power / std::pow(10.0, snr_db / 10.0) / 2.0);

    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    SParamSet out = s;
    for (auto& v : out.values) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        v += sigma * Complex{re, im};
    }
    return out;
}

}  // namespace dsm
