#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dsm/em.hpp"
#include "dsm/errors.hpp"
#include "dsm/special_functions.hpp"

using namespace dsm;

namespace {

MediumParams medium(double eps, double sigma) {
    MediumParams m;
    m.eps_rel_background = eps;
    m.sigma_background = sigma;
    m.frequency = 1.0e9;
    return m;
}

const double kFreeSpace = 2.0 * std::numbers::pi * 1.0e9 * std::sqrt(kVacuumPermeability * kVacuumPermittivity);

}  // namespace

TEST_CASE("wavenumber of free space") {
    const Wavenumber k = wavenumber(medium(1.0, 0.0));
    CHECK(k.k.real() == doctest::Approx(kFreeSpace).epsilon(1e-14));
    CHECK(k.k.real() == doctest::Approx(20.9585).epsilon(1e-5));
    CHECK(k.k.imag() == 0.0);
    CHECK(k.wavelength == doctest::Approx(2.0 * std::numbers::pi / kFreeSpace));
}

TEST_CASE("wavenumber scales with sqrt(eps)") {
    const Wavenumber k = wavenumber(medium(20.0, 0.0));
    CHECK(k.k.real() == doctest::Approx(std::sqrt(20.0) * kFreeSpace).epsilon(1e-14));
    CHECK(k.k.real() == doctest::Approx(93.73).epsilon(1e-4));
    CHECK_FALSE(k.lossy());
}

TEST_CASE("lossy wavenumber re-squares to the defining expression") {
    const MediumParams m = medium(20.0, 0.2);
    const Wavenumber k = wavenumber(m);
    const double omega = m.angular_frequency();
    const Complex expected = omega * omega * m.mu * Complex{kVacuumPermittivity * 20.0, 0.2 / omega};
    CHECK(std::abs(k.k * k.k - expected) <= 1e-12 * std::abs(expected));
    CHECK(k.k.real() > 0.0);
    CHECK(k.k.imag() > 0.0);
    CHECK(k.lossy());
}

TEST_CASE("background wavelength admits the small-anomaly premise") {
    const Wavenumber k = wavenumber(medium(20.0, 0.2));
    CHECK(k.wavelength > 0.06);
    CHECK(k.wavelength < 0.08);
    CHECK(0.01 < k.wavelength / 2.0);
}

TEST_CASE("medium validation") {
    CHECK_NOTHROW(medium(20.0, 0.2).validate());
    CHECK_THROWS_AS(medium(0.5, 0.2).validate(), ValidationError);
    CHECK_THROWS_AS(medium(20.0, -1.0).validate(), ValidationError);
    MediumParams bad = medium(20.0, 0.2);
    bad.frequency = 0.0;
    CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("contrast") {
    const MediumParams bg = medium(20.0, 0.2);
    const double omega = 2.0 * std::numbers::pi * 1.0e9;

    SUBCASE("matched anomaly has zero contrast in both modes") {
        const Anomaly same{{0.0, 0.0}, 0.01, 20.0, 0.2};
        CHECK(contrast(same, bg, ContrastMode::sigma_ratio) == Complex{});
        CHECK(contrast(same, bg, ContrastMode::conventional) == Complex{});
    }
    SUBCASE("example 1 parameters, sigma_ratio normalisation") {
        const Anomaly a{{0.01, 0.03}, 0.01, 55.0, 1.2};
        const Complex chi = contrast(a, bg, ContrastMode::sigma_ratio);
        CHECK(chi.real() == 1.75);
        CHECK(chi.imag() == doctest::Approx(1.0 / (omega * 0.2)).epsilon(1e-14));
    }
    SUBCASE("example 1 parameters, conventional normalisation") {
        const Anomaly a{{0.01, 0.03}, 0.01, 55.0, 1.2};
        const Complex chi = contrast(a, bg, ContrastMode::conventional);
        CHECK(chi.real() == 1.75);
        CHECK(chi.imag() == doctest::Approx(1.0 / (omega * kVacuumPermittivity * 20.0)).epsilon(1e-14));
    }
    SUBCASE("sigma_ratio normalisation needs a conducting background") {
        const Anomaly a{{0.0, 0.0}, 0.01, 55.0, 1.2};
        CHECK_THROWS_AS((void)contrast(a, medium(20.0, 0.0), ContrastMode::sigma_ratio), DomainError);
        CHECK_NOTHROW((void)contrast(a, medium(20.0, 0.0), ContrastMode::conventional));
    }
    SUBCASE("baseline contrast is zero, so differences are additive") {
        for (auto mode : {ContrastMode::sigma_ratio, ContrastMode::conventional}) {
            const Anomaly a{{0.0, 0.0}, 0.01, 37.0, 0.9};
            const Anomaly base{{0.0, 0.0}, 0.01, 20.0, 0.2};
            CHECK(contrast(a, bg, mode) - contrast(base, bg, mode) == contrast(a, bg, mode));
        }
    }
}

TEST_CASE("polar antenna array") {
    const AntennaArray array = AntennaArray::polar(16, 0.09, 3.0 * std::numbers::pi / 2.0);
    CHECK(array.size() == 16);
    CHECK_NOTHROW(array.validate());
    const auto angles = array.receiver_angles();
    // theta_1 = 3 pi / 2, reported by atan2 as -pi/2.
    CHECK(angles[0] == doctest::Approx(-std::numbers::pi / 2.0).epsilon(1e-14));
    CHECK(array.tx.x == doctest::Approx(array.rx[0].x));
    CHECK(array.tx.y == doctest::Approx(array.rx[0].y));
    for (std::size_t n = 1; n < array.size(); ++n) {
        const double gap = std::remainder(angles[n - 1] - angles[n], 2.0 * std::numbers::pi);
        CHECK(gap == doctest::Approx(2.0 * std::numbers::pi / 16.0).epsilon(1e-12));
        CHECK(norm(array.rx[n]) == doctest::Approx(0.09).epsilon(1e-14));
    }
    CHECK_THROWS_AS((void)AntennaArray::polar(1, 0.09, 0.0), ValidationError);
}

TEST_CASE("explicit antenna array must lie on one circle") {
    auto ok = AntennaArray::explicit_points({0.0, -0.09}, {{0.0, -0.09}, {0.09, 0.0}, {0.0, 0.09}});
    CHECK_NOTHROW(ok.validate());
    auto off = AntennaArray::explicit_points({0.0, -0.09}, {{0.0, -0.09}, {0.091, 0.0}});
    CHECK_THROWS_AS(off.validate(), ValidationError);
    auto single = AntennaArray::explicit_points({0.0, -0.09}, {{0.0, -0.09}});
    CHECK_THROWS_AS(single.validate(), ValidationError);
}

TEST_CASE("incident field") {
    const Wavenumber lossless = wavenumber(medium(20.0, 0.0));

    SUBCASE("exact mode is reciprocal") {
        const Point2 a{0.03, -0.02};
        const Point2 b{-0.05, 0.07};
        CHECK(incident_field(lossless, a, b, FieldMode::exact) == incident_field(lossless, b, a, FieldMode::exact));
    }
    SUBCASE("exact mode is (i/4) H0^(1)") {
        const double d = 0.05;
        const double x = lossless.k.real() * d;
        const Complex expected = Complex{0.0, 0.25} * Complex{special::bessel_j(special::BesselOrder{0}, x),
                                                               special::bessel_y0(x)};
        CHECK(std::abs(incident_field(lossless, {d, 0.0}, {0.0, 0.0}, FieldMode::exact) - expected) <= 1e-15);
    }
    SUBCASE("asymptotic magnitude at the origin") {
        const Wavenumber k{Complex{93.73, 0.0}, 2.0 * std::numbers::pi / 93.73};
        const Complex e = incident_field(k, polar(0.09, 1.0), {0.0, 0.0}, FieldMode::asymptotic);
        const double expected = std::sqrt(2.0) / (4.0 * std::sqrt(93.73 * std::numbers::pi)) / std::sqrt(0.09);
        CHECK(std::abs(e) == doctest::Approx(expected).epsilon(1e-14));
    }
    SUBCASE("exact and asymptotic agree in magnitude far from the source") {
        double worst = 0.0;
        for (int a = 0; a < 16; ++a) {
            const Point2 src = polar(0.09, 2.0 * std::numbers::pi * a / 16.0);
            for (int t = 0; t < 12; ++t) {
                const Point2 obs = polar(0.004, 0.5 * t);
                REQUIRE(lossless.k.real() * distance(src, obs) >= 8.0);
                const double exact = std::abs(incident_field(lossless, src, obs, FieldMode::exact));
                const double asym = std::abs(incident_field(lossless, src, obs, FieldMode::asymptotic));
                worst = std::max(worst, std::abs(asym - exact) / exact);
            }
        }
        CHECK(worst <= 0.05);
    }
    SUBCASE("exact vs asymptotic at k|obs - src| >= 20") {
        const Wavenumber far = wavenumber(medium(120.0, 0.0));
        const Point2 src = polar(0.09, 0.3);
        const Point2 obs{0.002, -0.003};
        REQUIRE(far.k.real() * distance(src, obs) >= 20.0);
        const double exact = std::abs(incident_field(far, src, obs, FieldMode::exact));
        const double asym = std::abs(incident_field(far, src, obs, FieldMode::asymptotic));
        CHECK(std::abs(asym - exact) <= 0.05 * exact);
    }
    SUBCASE("coincident points") {
        CHECK_THROWS_AS((void)incident_field(lossless, {0.01, 0.0}, {0.01, 0.0}, FieldMode::exact), DomainError);
        CHECK_THROWS_AS((void)incident_field(lossless, {0.01, 0.0}, {0.01, 0.0}, FieldMode::asymptotic), DomainError);
    }
    SUBCASE("exact mode needs real k") {
        const Wavenumber lossy = wavenumber(medium(20.0, 0.2));
        CHECK_THROWS_AS((void)incident_field(lossy, {0.09, 0.0}, {0.0, 0.0}, FieldMode::exact), UnsupportedModeError);
        CHECK_NOTHROW((void)incident_field(lossy, {0.09, 0.0}, {0.0, 0.0}, FieldMode::asymptotic));
        CHECK(default_field_mode(lossy) == FieldMode::asymptotic);
        CHECK(default_field_mode(lossless) == FieldMode::exact);
    }
}
