#pragma once

// Integer-order Bessel functions of real argument, the Hankel function H0^(2)
// and the truncated Jacobi-Anger expansion.
//
// J_m is computed by Miller's downward recurrence normalised with
// J_0 + 2 * sum_k J_2k = 1. The recurrence is started far enough above
// max(m, |x|) that the seed error is below double precision, which keeps the
// absolute error around 1e-13 for |x| <= 1e4.

#include <complex>
#include <vector>

namespace dsm::special {

/// Integer Bessel order. Negative orders resolve via J_{-m} = (-1)^m J_m.
struct BesselOrder {
    int m{0};

    constexpr BesselOrder() = default;
    constexpr explicit BesselOrder(int order) : m(order) {}
};

/// Largest |x| for which the accuracy target is validated.
inline constexpr double kValidatedArgument = 1.0e4;

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = 0.57721566490153286060651209;

/// J_m(x). Throws DomainError for non-finite x.
[[nodiscard]] double bessel_j(BesselOrder order, double x);

/// J_0(x), ..., J_{max_order}(x) from a single downward sweep.
[[nodiscard]] std::vector<double> bessel_j_sequence(int max_order, double x);

/// Same as bessel_j_sequence, writing into `out` (resized to max_order + 1).
void bessel_j_sequence(int max_order, double x, std::vector<double>& out);

/// Y_0(x) for x > 0.
[[nodiscard]] double bessel_y0(double x);

/// H0^(2)(x) = J_0(x) - i Y_0(x). Throws DomainError for x <= 0.
[[nodiscard]] std::complex<double> hankel_h0_second(double x);

/// J_0(x) + sum_{0<|m|<=M} i^m J_m(x) e^{i m theta}.
[[nodiscard]] std::complex<double> jacobi_anger(double x, double theta, int max_order);

/// Truncation order used for every internal Jacobi-Anger sum: ceil(x) + 40.
[[nodiscard]] int safe_truncation_order(double x);

}  // namespace dsm::special
