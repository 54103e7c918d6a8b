#pragma once

// Self-checks run by `dsm verify`: the special-function property suite and the
// comparison between the DSM map and the analytic structure-function map.

#include <string>
#include <vector>

#include "dsm/imaging.hpp"

namespace dsm::diagnostics {

struct CheckResult {
    std::string name;
    double measured{0.0};
    double tolerance{0.0};
    bool passed{false};
};

/// J_0 by its power series, summed until terms drop below 1e-18 (x <= ~20).
[[nodiscard]] double bessel_j0_power_series(double x);

/// First zero of J_0 by bisection of the power series on [2, 3].
[[nodiscard]] double first_j0_zero_by_bisection();

/// Recurrence residual on m in [1,30], x in (0,30]; Jacobi-Anger truncation
/// error for x <= 20 at M = ceil(x)+40 on 100 angles; first J_0 zero.
[[nodiscard]] std::vector<CheckResult> special_function_suite();

struct IdentityChainResult {
    double max_deviation{0.0};
    std::size_t worst_index{0};
    Point2 worst_point;
    int truncation_order{0};
    bool passed{false};
};

inline constexpr double kIdentityChainTolerance = 1e-6;

/// Max pointwise |indicator_map(s) - analytic_phi_map| with asymptotic fields.
[[nodiscard]] IdentityChainResult identity_chain(const SParamSet& s, const Scenario& scenario,
                                                 int truncation_order, ExecPolicy policy = {});

/// ceil(Re(k) * 0.2) + 40, the order used by the identity-chain check.
[[nodiscard]] int identity_chain_order(const Scenario& scenario);

struct SweepRow {
    int n{0};
    double max_artifact{0.0};
};

struct SweepResult {
    std::vector<SweepRow> rows;
    double slack{0.02};
    bool non_increasing{false};
};

/// DSM maps from asymptotic Born data for arrays of each size in `sizes` (same
/// radius and transmitter angle as the scenario). Reports the largest value
/// outside a lambda/2 disk around the first anomaly.
[[nodiscard]] SweepResult artifact_sweep(const Scenario& scenario, const std::vector<int>& sizes,
                                         ExecPolicy policy = {});

}  // namespace dsm::diagnostics
