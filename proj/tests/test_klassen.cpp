#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "obcalc/klassen.hpp"

using namespace obcalc::klassen;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("fibration values") {
    CHECK(std::abs(fibration_value(0.75, 0, 0) - std::complex<double>(1, 0)) < 1e-12);
    CHECK(std::abs(fibration_value(0, 0.5, 0.5) - std::complex<double>(1, 0)) < 1e-12);
    // Off the page F_0: a quarter turn.
    auto v = fibration_value(0.75, 0, 0.25);
    CHECK(std::abs(v - std::complex<double>(0, 1)) < 1e-12);
    CHECK_THROWS(fibration_value(0.5, 0, 0.3));
    CHECK_THROWS(fibration_value(-0.5, 0, 0.7));

    // Unit modulus and multiplicativity in t.
    std::mt19937 rng(103);
    std::uniform_real_distribution<double> coord(-0.9, 0.9), level(0, 1);
    for (int i = 0; i < 2000; ++i) {
        double x = coord(rng), y = coord(rng);
        if (x * x + y * y > 1 || std::hypot(std::abs(x) - 0.5, y) < 1e-3) continue;
        double t = level(rng), s = level(rng);
        auto p = fibration_value(x, y, t);
        CHECK(std::abs(std::abs(p) - 1.0) < 1e-12);
        auto shifted = fibration_value(x, y, t + s);
        auto rotated = p * std::exp(std::complex<double>(0, 2 * kPi * s));
        CHECK(std::abs(shifted - rotated) < 1e-12);
    }
}

TEST_CASE("cross sections at the explicit levels") {
    SliceReport t0 = cross_section(0.0, 256);
    CHECK(!t0.points.empty());
    CHECK(t0.max_residual < 1e-9);
    for (const auto& p : t0.points) {
        CHECK(std::abs(p.y) < 1e-9);
        CHECK(std::abs(p.x) > 0.5);
        CHECK(std::abs(p.x) <= 1 + 1e-9);
    }

    SliceReport half = cross_section(0.5, 256);
    CHECK(half.max_residual < 1e-9);
    for (const auto& p : half.points) {
        bool imag_axis = std::abs(p.x) < 1e-9;
        bool real_segment = std::abs(p.y) < 1e-9 && std::abs(p.x) < 0.5;
        CHECK((imag_axis || real_segment));
    }

    SliceReport quarter = cross_section(0.25, 256);
    CHECK(quarter.max_residual < 1e-9);
    for (const auto& p : quarter.points) {
        // On the hyperbola x^2 - y^2 = 1/4, in the region xy < 0.
        CHECK(std::abs(p.x * p.x - p.y * p.y - 0.25) < 1e-9);
        CHECK(p.x * p.y < 1e-12);
    }
    CHECK_THROWS(cross_section(1.5, 256));
    CHECK_THROWS(cross_section(0.5, 8));
}

TEST_CASE("every emitted point satisfies the defining conditions") {
    std::mt19937 rng(107);
    std::uniform_real_distribution<double> level(0, 1);
    for (int i = 0; i < 24; ++i) {
        double t = level(rng);
        SliceReport rep = cross_section(t, 128);
        CHECK(rep.max_residual < 1e-9);
        for (const auto& p : rep.points) {
            std::complex<double> z(p.x, p.y);
            auto w = (z * z - 0.25) * std::exp(std::complex<double>(0, 2 * kPi * t));
            CHECK(std::abs(w.imag()) < 1e-9);
            CHECK(w.real() > -1e-9);
            CHECK(p.x * p.x + p.y * p.y <= 1 + 1e-9);
        }
    }
}

TEST_CASE("component counts") {
    CHECK(component_count(0.25, 256) == 1);
    CHECK(component_count(0.5, 256) == 2);
    CHECK(component_count(0.75, 256) == 1);
    CHECK(component_count(0.0, 256) == 1);
    CHECK(component_count(1.0, 256) == 1);
    CHECK_THROWS(component_count(0.25, 32));
}

TEST_CASE("page translation property") {
    CHECK(translation_check(0.0, 0.37, 128) < 1e-9);
    double tol = 2 * (2 * kPi / 128);
    CHECK(translation_check(0.25, 0.5, 128) < tol);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(translation_check(i / 8.0, j / 8.0, 128) < tol);
}

TEST_CASE("conjugation symmetry between t and 1 - t") {
    // Eq. real is preserved by (x, y, t) -> (x, -y, 1 - t).
    for (double t : {0.1, 0.25, 0.4, 0.45}) {
        SliceReport a = cross_section(t, 128);
        SliceReport b = cross_section(1.0 - t, 128);
        REQUIRE(!a.points.empty());
        REQUIRE(!b.points.empty());
        double worst = 0;
        for (const auto& p : a.points) {
            double best = 2;
            for (const auto& q : b.points)
                best = std::min(best, std::hypot(p.x - q.x, -p.y - q.y));
            worst = std::max(worst, best);
        }
        CHECK(worst < 2 * (2 * kPi / 128));
    }
}
