#pragma once

// Physical parameterisation of the planar problem: background medium, complex
// wavenumber, anomaly contrast, antenna geometry and the scalar incident field.

#include <numbers>
#include <string_view>
#include <vector>

#include "dsm/geometry.hpp"

namespace dsm {

inline constexpr double kVacuumPermeability = 4.0e-7 * std::numbers::pi;  // H/m
inline constexpr double kVacuumPermittivity = 8.8541878128e-12;           // F/m

struct MediumParams {
    double eps_rel_background{1.0};  ///< relative permittivity
    double sigma_background{0.0};    ///< S/m
    double mu{kVacuumPermeability};  ///< H/m
    double frequency{1.0e9};         ///< Hz

    [[nodiscard]] double angular_frequency() const {
        return 2.0 * std::numbers::pi * frequency;
    }
    [[nodiscard]] bool lossless() const { return sigma_background == 0.0; }

    /// Throws ValidationError unless eps >= 1, sigma >= 0, f > 0, mu > 0.
    void validate() const;
};

struct Wavenumber {
    Complex k;
    double wavelength{0.0};  ///< 2*pi / Re(k), meters

    [[nodiscard]] bool lossy() const { return k.imag() > 0.0; }
};

struct Anomaly {
    Point2 center;
    double radius{0.0};   ///< m
    double eps_rel{1.0};
    double sigma{0.0};    ///< S/m
};

struct AntennaArray {
    Point2 tx;
    std::vector<Point2> rx;
    double radius{0.0};  ///< common |rx[n]|

    [[nodiscard]] std::size_t size() const { return rx.size(); }

    /// Receivers on a circle: theta_n = tx_angle - 2*pi*(n-1)/N, transmitter at tx_angle.
    [[nodiscard]] static AntennaArray polar(int n, double radius, double tx_angle);

    /// Explicit receivers. Radius is taken from rx[0]; validate() checks the rest.
    [[nodiscard]] static AntennaArray explicit_points(Point2 tx, std::vector<Point2> rx);

    /// Throws ValidationError if N < 2 or some |rx[n]| differs from R by more than 1e-12 relative.
    void validate() const;

    /// Angles theta_n of the receivers.
    [[nodiscard]] std::vector<double> receiver_angles() const;
};

enum class ContrastMode { sigma_ratio, conventional };
enum class FieldMode { exact, asymptotic };

[[nodiscard]] std::string_view to_string(ContrastMode mode);
[[nodiscard]] std::string_view to_string(FieldMode mode);

/// Principal root of omega^2 mu (eps0 eps_B + i sigma_B / omega).
[[nodiscard]] Wavenumber wavenumber(const MediumParams& medium);

/// Complex contrast chi of the anomaly against the background.
///
/// `sigma_ratio` uses (eps_D - eps_B)/eps_B + i (sigma_D - sigma_B)/(omega sigma_B) and
/// requires sigma_B > 0. `conventional` normalises the conductivity term by
/// omega eps0 eps_B instead.
[[nodiscard]] Complex contrast(const Anomaly& anomaly, const MediumParams& medium, ContrastMode mode);

/// Scalar incident field at `obs` due to a line source at `src`.
///
/// exact:      (i/4) H0^(1)(Re(k)|obs - src|), lossless media only.
/// asymptotic: (1+i)/(4 sqrt(k pi)) e^{ik|src|}/sqrt|src| e^{-ik theta_src . obs},
///             the far-field form with `src` the distant antenna and `obs` near the origin.
[[nodiscard]] Complex incident_field(const Wavenumber& k, Point2 src, Point2 obs, FieldMode mode);

/// Field mode used when a scenario leaves it unspecified.
[[nodiscard]] FieldMode default_field_mode(const Wavenumber& k);

}  // namespace dsm
