#include "dsm/em.hpp"

#include <cmath>
#include <string>

#include "dsm/errors.hpp"
#include "dsm/special_functions.hpp"

namespace dsm {

void MediumParams::validate() const {
    if (!(eps_rel_background >= 1.0)) {
        throw ValidationError("medium.eps_rel must be >= 1");
    }
    if (!(sigma_background >= 0.0)) {
        throw ValidationError("medium.sigma must be >= 0");
    }
    if (!(frequency > 0.0) || !std::isfinite(frequency)) {
        throw ValidationError("medium.frequency_hz must be positive");
    }
    if (!(mu > 0.0) || !std::isfinite(mu)) {
        throw ValidationError("medium.mu must be positive");
    }
}

AntennaArray AntennaArray::polar(int n, double radius, double tx_angle) {
    if (n < 2) {
        throw ValidationError("array.n must be >= 2, got " + std::to_string(n));
    }
    if (!(radius > 0.0)) {
        throw ValidationError("array.radius_m must be positive");
    }
    AntennaArray array;
    array.radius = radius;
    array.tx = dsm::polar(radius, tx_angle);
    array.rx.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        array.rx.push_back(dsm::polar(radius, tx_angle - 2.0 * std::numbers::pi * i / n));
    }
    return array;
}

AntennaArray AntennaArray::explicit_points(Point2 tx, std::vector<Point2> rx) {
    AntennaArray array;
    array.tx = tx;
    array.rx = std::move(rx);
    array.radius = array.rx.empty() ? 0.0 : norm(array.rx.front());
    return array;
}

void AntennaArray::validate() const {
    if (rx.size() < 2) {
        throw ValidationError("array must have N >= 2 receivers, got " + std::to_string(rx.size()));
    }
    if (!(radius > 0.0)) {
        throw ValidationError("array radius must be positive");
    }
    for (std::size_t n = 0; n < rx.size(); ++n) {
        if (std::abs(norm(rx[n]) - radius) > 1e-12 * radius) {
            throw ValidationError("array.rx[" + std::to_string(n) + "] is not on the circle |r| = R");
        }
    }
}

std::vector<double> AntennaArray::receiver_angles() const {
    std::vector<double> angles;
    angles.reserve(rx.size());
    for (const auto& p : rx) {
        angles.push_back(angle_of(p));
    }
    return angles;
}

std::string_view to_string(ContrastMode mode) {
    return mode == ContrastMode::sigma_ratio ? "sigma_ratio" : "conventional";
}

std::string_view to_string(FieldMode mode) {
    return mode == FieldMode::exact ? "exact" : "asymptotic";
}

Wavenumber wavenumber(const MediumParams& medium) {
    const double omega = medium.angular_frequency();
    const Complex k2 = omega * omega * medium.mu *
                       Complex{kVacuumPermittivity * medium.eps_rel_background,
                               medium.sigma_background / omega};
    Complex k = std::sqrt(k2);
    if (k.real() < 0.0) {
        k = -k;
    }
    return {k, 2.0 * std::numbers::pi / k.real()};
}

Complex contrast(const Anomaly& anomaly, const MediumParams& medium, ContrastMode mode) {
    const double omega = medium.angular_frequency();
    const double re = (anomaly.eps_rel - medium.eps_rel_background) / medium.eps_rel_background;
    const double dsigma = anomaly.sigma - medium.sigma_background;
    if (mode == ContrastMode::sigma_ratio) {
        if (medium.sigma_background == 0.0) {
            throw DomainError("contrast: sigma_ratio mode divides by omega*sigma_B, which is zero");
        }
        return {re, dsigma / (omega * medium.sigma_background)};
    }
    return {re, dsigma / (omega * kVacuumPermittivity * medium.eps_rel_background)};
}

Complex incident_field(const Wavenumber& k, Point2 src, Point2 obs, FieldMode mode) {
    const double separation = distance(src, obs);
    if (separation == 0.0) {
        throw DomainError("incident_field: source and observation points coincide");
    }
    if (mode == FieldMode::exact) {
        if (k.lossy()) {
            throw UnsupportedModeError("incident_field: exact mode requires a lossless medium (real k)");
        }
        // (i/4) H0^(1)(x) = (i/4) conj(H0^(2)(x)) for real x.
        const Complex h2 = special::hankel_h0_second(k.k.real() * separation);
        return Complex{0.0, 0.25} * std::conj(h2);
    }
    const double range = norm(src);
    if (range == 0.0) {
        throw DomainError("incident_field: asymptotic mode needs a source away from the origin");
    }
    const Point2 direction = (1.0 / range) * src;
    const Complex i_unit{0.0, 1.0};
    const Complex amplitude = Complex{1.0, 1.0} / (4.0 * std::sqrt(k.k * std::numbers::pi));
    return amplitude * std::exp(i_unit * k.k * range) / std::sqrt(range) *
           std::exp(-i_unit * k.k * dot(direction, obs));
}

FieldMode default_field_mode(const Wavenumber& k) {
    return k.lossy() ? FieldMode::asymptotic : FieldMode::exact;
}

}  // namespace dsm
