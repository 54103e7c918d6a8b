#include "dsm/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dsm/errors.hpp"

namespace dsm::special {
namespace {

constexpr double kRescaleAbove = 1.0e200;
constexpr double kRescaleFactor = 1.0e-200;

void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) {
        throw DomainError(std::string(what) + ": argument must be finite");
    }
}

// Even starting order for the downward sweep. Past the turning point m ~ x the
// ratio J_m / J_x falls like exp(-(2/3) t^{3/2}) with t = (m - x) / (x/2)^{1/3};
// t = 16 puts the seed below 1e-18.
int miller_start(int max_order, double ax) {
    const double base = std::max(static_cast<double>(max_order), ax);
    const int start = static_cast<int>(std::ceil(base + 20.0 + 16.0 * std::cbrt(ax / 2.0)));
    return start + (start % 2);
}

// J_0..J_max_order for ax > 0.
void miller_positive(int max_order, double ax, std::vector<double>& out) {
    const int start = miller_start(max_order, ax);
    std::vector<double> work(static_cast<std::size_t>(start) + 2, 0.0);
    work[static_cast<std::size_t>(start)] = 1.0;
    const double two_over_x = 2.0 / ax;
    for (int m = start; m >= 1; --m) {
        const auto um = static_cast<std::size_t>(m);
        work[um - 1] = m * two_over_x * work[um] - work[um + 1];
        if (std::abs(work[um - 1]) > kRescaleAbove) {
            for (std::size_t i = um - 1; i <= static_cast<std::size_t>(start); ++i) {
                work[i] *= kRescaleFactor;
            }
        }
    }
    double sum = work[0];
    for (int m = 2; m <= start; m += 2) {
        sum += 2.0 * work[static_cast<std::size_t>(m)];
    }
    out.resize(static_cast<std::size_t>(max_order) + 1);
    for (int m = 0; m <= max_order; ++m) {
        out[static_cast<std::size_t>(m)] = work[static_cast<std::size_t>(m)] / sum;
    }
}

}  // namespace

void bessel_j_sequence(int max_order, double x, std::vector<double>& out) {
    require_finite(x, "bessel_j");
    if (max_order < 0) {
        throw DomainError("bessel_j_sequence: max_order must be non-negative");
    }
    if (x == 0.0) {
        out.assign(static_cast<std::size_t>(max_order) + 1, 0.0);
        out[0] = 1.0;
        return;
    }
    miller_positive(max_order, std::abs(x), out);
    if (x < 0.0) {
        for (std::size_t m = 1; m < out.size(); m += 2) {
            out[m] = -out[m];
        }
    }
}

std::vector<double> bessel_j_sequence(int max_order, double x) {
    std::vector<double> out;
    bessel_j_sequence(max_order, x, out);
    return out;
}

double bessel_j(BesselOrder order, double x) {
    require_finite(x, "bessel_j");
    const int m = std::abs(order.m);
    const double sign = (order.m < 0 && (m % 2) == 1) ? -1.0 : 1.0;
    if (x == 0.0) {
        return m == 0 ? 1.0 : 0.0;
    }
    std::vector<double> seq;
    bessel_j_sequence(m, x, seq);
    return sign * seq[static_cast<std::size_t>(m)];
}

double bessel_y0(double x) {
    require_finite(x, "bessel_y0");
    if (x <= 0.0) {
        throw DomainError("bessel_y0: argument must be positive");
    }
    // Neumann series: Y0 = (2/pi)(ln(x/2) + gamma) J0 - (4/pi) sum_k (-1)^k J_2k / k.
    const int top = 2 * (static_cast<int>(std::ceil(x)) + 40);
    std::vector<double> j;
    bessel_j_sequence(top, x, j);
    double tail = 0.0;
    for (int k = top / 2; k >= 1; --k) {
        const double term = j[static_cast<std::size_t>(2 * k)] / k;
        tail += (k % 2 == 0) ? term : -term;
    }
    using std::numbers::pi;
    return (2.0 / pi) * (std::log(x / 2.0) + kEulerGamma) * j[0] - (4.0 / pi) * tail;
}

std::complex<double> hankel_h0_second(double x) {
    require_finite(x, "hankel_h0_second");
    if (x <= 0.0) {
        throw DomainError("hankel_h0_second: argument must be positive (logarithmic singularity at 0)");
    }
    return {bessel_j(BesselOrder{0}, x), -bessel_y0(x)};
}

std::complex<double> jacobi_anger(double x, double theta, int max_order) {
    if (max_order < 0) {
        throw DomainError("jacobi_anger: truncation order must be non-negative");
    }
    require_finite(theta, "jacobi_anger");
    std::vector<double> j;
    bessel_j_sequence(max_order, x, j);
    // Orders m and -m pair up as 2 i^m J_m cos(m theta).
    std::complex<double> sum{j[0], 0.0};
    std::complex<double> i_pow{1.0, 0.0};
    const std::complex<double> i_unit{0.0, 1.0};
    for (int m = 1; m <= max_order; ++m) {
        i_pow *= i_unit;
        sum += 2.0 * j[static_cast<std::size_t>(m)] * std::cos(m * theta) * i_pow;
    }
    return sum;
}

int safe_truncation_order(double x) {
    return static_cast<int>(std::ceil(std::abs(x))) + 40;
}

}  // namespace dsm::special
