#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "dsm/errors.hpp"
#include "dsm/forward.hpp"
#include "fixtures.hpp"

using namespace dsm;

namespace {

double max_relative_gap(const SParamSet& a, const SParamSet& b) {
    double worst = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        worst = std::max(worst, std::abs(a.values[n] - b.values[n]) / std::abs(b.values[n]));
    }
    return worst;
}

double l2_gap(const std::vector<Complex>& a, const std::vector<Complex>& b) {
    double sum = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) {
        sum += std::norm(a[n] - b[n]);
    }
    return std::sqrt(sum);
}

}  // namespace

TEST_CASE("synth_point: zero contrast gives zero data") {
    Scenario s = fixtures::example1();
    s.anomalies[0].eps_rel = 20.0;
    s.anomalies[0].sigma = 0.2;
    const SParamSet data = synth_point(s, FieldMode::asymptotic);
    REQUIRE(data.size() == 16);
    for (const auto& v : data.values) {
        CHECK(v == Complex{});
    }
}

TEST_CASE("synth_point is linear in the contrast") {
    const Scenario s = fixtures::example1();
    Scenario doubled = s;
    // chi -> 2 chi: eps' - eps_B = 2 (eps - eps_B), same for sigma.
    doubled.anomalies[0].eps_rel = 2.0 * 55.0 - 20.0;
    doubled.anomalies[0].sigma = 2.0 * 1.2 - 0.2;
    const SParamSet once = synth_point(s, FieldMode::asymptotic);
    const SParamSet twice = synth_point(doubled, FieldMode::asymptotic);
    for (std::size_t n = 0; n < once.size(); ++n) {
        CHECK(std::abs(twice.values[n] - 2.0 * once.values[n]) <= 1e-14 * std::abs(twice.values[n]));
    }
}

TEST_CASE("synth_point reproduces the independent Example 1 evaluation") {
    // tests/oracles/example1_sparams.py: asymptotic fields, sigma_ratio contrast.
    const Complex expected[] = {
        {2.3971060592477624e-10, 1.9491643536472055e-10},   {2.062919013447399e-10, 2.24626501960126e-10},
        {2.718118485956856e-10, 1.560771823169361e-10},     {3.2792376340757114e-10, -6.328809032442953e-11},
        {1.3261858873424557e-10, -3.404892627166174e-10},   {-2.84945505531311e-10, -2.877077263516325e-10},
        {-4.2335798144612173e-10, 1.4484709029184784e-10},  {-1.5453249868261696e-10, 4.6033853006222347e-10},
        {1.2702159595380603e-10, 4.950940048749956e-10},    {1.9990278046891833e-10, 4.776455965785268e-10},
        {4.512588604312464e-11, 5.01798432104706e-10},      {-2.755836917402203e-10, 3.8422563132324455e-10},
        {-4.3138641274583383e-10, -2.5973440516207526e-11}, {-1.3689438824622068e-10, -3.6516563828346277e-10},
        {2.4344539864060115e-10, -2.5551785415364795e-10},  {3.2332499681424675e-10, 3.4951050529332886e-11},
    };
    const SParamSet data = synth_point(fixtures::example1(), FieldMode::asymptotic);
    REQUIRE(data.size() == 16);
    for (std::size_t n = 0; n < 16; ++n) {
        CAPTURE(n);
        CHECK(std::abs(data.values[n] - expected[n]) <= 1e-12 * std::abs(expected[n]));
    }
}

TEST_CASE("synthesis is additive over anomaly sets") {
    for (auto mode : {FieldMode::exact, FieldMode::asymptotic}) {
        Scenario a = fixtures::lossless_example1();
        Scenario b = a;
        b.anomalies = {Anomaly{{-0.04, 0.01}, 0.008, 40.0, 0.0}, Anomaly{{0.02, -0.05}, 0.006, 30.0, 0.0}};
        Scenario both = a;
        both.anomalies.insert(both.anomalies.end(), b.anomalies.begin(), b.anomalies.end());
        const auto sa = synth_point(a, mode);
        const auto sb = synth_point(b, mode);
        const auto sab = synth_point(both, mode);
        for (std::size_t n = 0; n < sab.size(); ++n) {
            CHECK(std::abs(sab.values[n] - (sa.values[n] + sb.values[n])) <= 1e-15 * std::abs(sab.values[n]));
        }
        const auto ea = synth_extended(a, 12, mode);
        const auto eb = synth_extended(b, 12, mode);
        const auto eab = synth_extended(both, 12, mode);
        for (std::size_t n = 0; n < eab.size(); ++n) {
            CHECK(std::abs(eab.values[n] - (ea.values[n] + eb.values[n])) <= 1e-13 * std::abs(eab.values[n]));
        }
    }
}

TEST_CASE("rotating transmitter and anomalies by the array pitch shifts the data cyclically") {
    const Scenario s = fixtures::lossless_example1();
    const double pitch = 2.0 * std::numbers::pi / 16.0;
    Scenario rotated = s;
    rotated.array.tx = rotate(s.array.tx, pitch);
    rotated.anomalies[0].center = rotate(s.anomalies[0].center, pitch);
    const auto base = synth_point(s, FieldMode::exact);
    const auto turned = synth_point(rotated, FieldMode::exact);
    // Receiver n of the rotated scene sees what receiver n+1 saw before.
    for (std::size_t n = 0; n < 16; ++n) {
        const auto& want = base.values[(n + 1) % 16];
        CHECK(std::abs(turned.values[n] - want) <= 1e-12 * std::abs(want));
    }
}

TEST_CASE("synth_point error paths") {
    Scenario s = fixtures::example1();
    SUBCASE("anomaly on an antenna") {
        s.anomalies[0].center = s.array.rx[3];
        CHECK_THROWS_AS((void)synth_point(s, FieldMode::asymptotic), DomainError);
    }
    SUBCASE("no anomalies") {
        s.anomalies.clear();
        CHECK_THROWS_AS((void)synth_point(s, FieldMode::asymptotic), ValidationError);
    }
    SUBCASE("large anomaly warns but succeeds") {
        std::vector<std::string> warnings;
        (void)synth_point(fixtures::example2(), FieldMode::asymptotic, &warnings);
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("lambda/2") != std::string::npos);
        warnings.clear();
        (void)synth_point(fixtures::example1(), FieldMode::asymptotic, &warnings);
        CHECK(warnings.empty());
    }
    SUBCASE("exact fields in a lossy medium") {
        CHECK_THROWS_AS((void)synth_point(s, FieldMode::exact), UnsupportedModeError);
    }
}

TEST_CASE("synth_extended tends to the point model for small disks") {
    for (auto mode : {FieldMode::exact, FieldMode::asymptotic}) {
        Scenario s = fixtures::lossless_example1();
        const double wavelength = wavenumber(s.medium).wavelength;
        s.anomalies[0].radius = wavelength / 50.0;
        const auto point = synth_point(s, mode);
        const auto disk = synth_extended(s, 10, mode);
        CHECK(max_relative_gap(disk, point) <= 0.01);
    }
}

TEST_CASE("synth_extended: zero contrast and resolution floor") {
    Scenario s = fixtures::example2();
    s.anomalies[0].eps_rel = 20.0;
    s.anomalies[0].sigma = 0.2;
    for (const auto& v : synth_extended(s, 10, FieldMode::asymptotic).values) {
        CHECK(v == Complex{});
    }
    CHECK_THROWS_AS((void)synth_extended(s, 9, FieldMode::asymptotic), ConfigError);
}

TEST_CASE("Example 2 disk departs from the point model") {
    const Scenario s = fixtures::example2();
    const auto point = synth_point(s, FieldMode::asymptotic);
    const auto disk = synth_extended(s, 20, FieldMode::asymptotic);
    CHECK(max_relative_gap(disk, point) >= 0.10);
}

TEST_CASE("synth_extended converges at second order") {
    const Scenario s = fixtures::example2();
    const auto coarse = synth_extended(s, 10, FieldMode::asymptotic).values;
    const auto mid = synth_extended(s, 20, FieldMode::asymptotic).values;
    const auto fine = synth_extended(s, 40, FieldMode::asymptotic).values;
    std::vector<Complex> limit(fine.size());
    for (std::size_t n = 0; n < fine.size(); ++n) {
        limit[n] = (4.0 * fine[n] - mid[n]) / 3.0;
    }
    const double dev_coarse = l2_gap(coarse, limit);
    const double dev_mid = l2_gap(mid, limit);
    CAPTURE(dev_coarse);
    CAPTURE(dev_mid);
    CHECK(dev_mid <= dev_coarse / 2.0);
}

TEST_CASE("add_noise") {
    const SParamSet clean = synth_point(fixtures::example1(), FieldMode::asymptotic);
    SUBCASE("infinite SNR is the identity") {
        CHECK(add_noise(clean, std::numeric_limits<double>::infinity(), 3) == clean);
    }
    SUBCASE("fixed seed is deterministic") {
        const auto a = add_noise(clean, 10.0, 7);
        const auto b = add_noise(clean, 10.0, 7);
        CHECK(a == b);
        CHECK_FALSE(a == add_noise(clean, 10.0, 8));
    }
    SUBCASE("noise power matches the requested SNR") {
        double signal = 0.0;
        for (const auto& v : clean.values) {
            signal += std::norm(v);
        }
        double noise = 0.0;
        for (std::uint64_t trial = 0; trial < 10000; ++trial) {
            const auto noisy = add_noise(clean, 20.0, trial);
            for (std::size_t n = 0; n < clean.size(); ++n) {
                noise += std::norm(noisy.values[n] - clean.values[n]);
            }
        }
        const double ratio = noise / (signal * 10000.0);
        CHECK(std::abs(ratio - 1e-2) <= 0.05 * 1e-2);
    }
    SUBCASE("NaN SNR") {
        CHECK_THROWS_AS((void)add_noise(clean, std::numeric_limits<double>::quiet_NaN(), 1), DomainError);
    }
}
