#include "dsm/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dsm/errors.hpp"
#include "dsm/special_functions.hpp"

namespace dsm::diagnostics {

double bessel_j0_power_series(double x) {
    // sum_j (-1)^j (x/2)^{2j} / (j!)^2
    const double q = x * x / 4.0;
    long double term = 1.0L;
    long double sum = 1.0L;
    for (int j = 1; j < 400; ++j) {
        term *= -static_cast<long double>(q) / (static_cast<long double>(j) * j);
        sum += term;
        if (std::abs(static_cast<double>(term)) < 1e-18) {
            break;
        }
    }
    return static_cast<double>(sum);
}

double first_j0_zero_by_bisection() {
    double lo = 2.0;
    double hi = 3.0;
    double f_lo = bessel_j0_power_series(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = bessel_j0_power_series(mid);
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<CheckResult> special_function_suite() {
    using special::BesselOrder;
    using special::bessel_j;
    std::vector<CheckResult> results;

    double recurrence = 0.0;
    for (int step = 1; step <= 300; ++step) {
        const double x = 0.1 * step;
        for (int m = 1; m <= 30; ++m) {
            const double residual = bessel_j(BesselOrder{m - 1}, x) + bessel_j(BesselOrder{m + 1}, x) -
                                    (2.0 * m / x) * bessel_j(BesselOrder{m}, x);
            recurrence = std::max(recurrence, std::abs(residual));
        }
    }
    results.push_back({"bessel three-term recurrence residual", recurrence, 1e-10, recurrence <= 1e-10});

    double expansion = 0.0;
    for (int step = 1; step <= 40; ++step) {
        const double x = 0.5 * step;
        const int order = special::safe_truncation_order(x);
        for (int t = 0; t < 100; ++t) {
            const double theta = 2.0 * std::numbers::pi * t / 100.0;
            const auto direct = std::exp(std::complex<double>{0.0, x * std::cos(theta)});
            expansion = std::max(expansion, std::abs(special::jacobi_anger(x, theta, order) - direct));
        }
    }
    results.push_back({"jacobi-anger truncation error", expansion, 1e-10, expansion <= 1e-10});

    const double zero = first_j0_zero_by_bisection();
    const double zero_error = std::abs(zero - 2.404825557695773);
    const double at_zero = std::abs(bessel_j(BesselOrder{0}, zero));
    results.push_back({"first J0 zero (series bisection)", zero_error, 1e-9, zero_error <= 1e-9});
    results.push_back({"J0 at series zero", at_zero, 1e-9, at_zero <= 1e-9});
    return results;
}

int identity_chain_order(const Scenario& scenario) {
    const double k_real = wavenumber(scenario.medium).k.real();
    return std::max(static_cast<int>(std::ceil(k_real * 0.2)) + 40, minimum_truncation_order(scenario));
}

IdentityChainResult identity_chain(const SParamSet& s, const Scenario& scenario, int truncation_order,
                                   ExecPolicy policy) {
    const IndicatorMap measured = indicator_map(s, scenario, FieldMode::asymptotic, policy);
    const IndicatorMap predicted = analytic_phi_map(scenario, truncation_order, policy);
    IdentityChainResult result;
    result.truncation_order = truncation_order;
    for (std::size_t p = 0; p < measured.size(); ++p) {
        const double dev = std::abs(measured.values[p] - predicted.values[p]);
        if (dev > result.max_deviation) {
            result.max_deviation = dev;
            result.worst_index = p;
        }
    }
    result.worst_point = measured.grid.points[result.worst_index];
    result.passed = result.max_deviation <= kIdentityChainTolerance;
    return result;
}

SweepResult artifact_sweep(const Scenario& scenario, const std::vector<int>& sizes, ExecPolicy policy) {
    if (scenario.anomalies.empty()) {
        throw ValidationError("artifact sweep needs an anomaly");
    }
    const double wavelength = wavenumber(scenario.medium).wavelength;
    const double tx_angle = angle_of(scenario.array.tx);
    SweepResult result;
    for (int n : sizes) {
        Scenario variant = scenario;
        variant.array = AntennaArray::polar(n, scenario.array.radius, tx_angle);
        const SParamSet data = synth_point(variant, FieldMode::asymptotic, nullptr, policy);
        const IndicatorMap map = indicator_map(data, variant, FieldMode::asymptotic, policy);
        result.rows.push_back({n, max_outside(map, scenario.anomalies.front().center, wavelength / 2.0)});
    }
    result.non_increasing = true;
    for (std::size_t i = 1; i < result.rows.size(); ++i) {
        if (result.rows[i].max_artifact > result.rows[i - 1].max_artifact + result.slack) {
            result.non_increasing = false;
        }
    }
    return result;
}

}  // namespace dsm::diagnostics
