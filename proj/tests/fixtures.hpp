#pragma once

#include <numbers>

#include "dsm/forward.hpp"

namespace dsm::fixtures {

inline constexpr double kTxAngle = 3.0 * std::numbers::pi / 2.0;

/// N = 16, f = 1 GHz, R = 0.09 m, eps_B = 20, sigma_B = 0.2 S/m, Omega radius 0.085 m, step 0.002 m.
inline Scenario reference_setup(int n = 16) {
    Scenario s;
    s.medium.eps_rel_background = 20.0;
    s.medium.sigma_background = 0.2;
    s.medium.frequency = 1.0e9;
    s.array = AntennaArray::polar(n, 0.09, kTxAngle);
    s.search_radius = 0.085;
    s.grid_step = 0.002;
    s.contrast_mode = ContrastMode::sigma_ratio;
    return s;
}

inline Scenario example1() {
    Scenario s = reference_setup();
    s.anomalies = {Anomaly{{0.01, 0.03}, 0.01, 55.0, 1.2}};
    return s;
}

inline Scenario example2() {
    Scenario s = reference_setup();
    s.anomalies = {Anomaly{{0.01, 0.02}, 0.05, 15.0, 0.5}};
    return s;
}

/// Example 1 with sigma_B = sigma_D = 0.
inline Scenario lossless_example1(int n = 16) {
    Scenario s = reference_setup(n);
    s.medium.sigma_background = 0.0;
    s.contrast_mode = ContrastMode::conventional;
    s.anomalies = {Anomaly{{0.01, 0.03}, 0.01, 55.0, 0.0}};
    return s;
}

}  // namespace dsm::fixtures
