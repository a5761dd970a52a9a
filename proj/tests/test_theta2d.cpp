#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lattice/errors.hpp"
#include "lattice/theta1d.hpp"
#include "lattice/theta2d.hpp"
#include "oracles.hpp"

using namespace lattice;

TEST_CASE("square lattice factorizes") {
    const double t3 = classical_theta(3, 1.0, 0);
    CHECK(theta2_direct({1.0, {0, 1}, {}}) == doctest::Approx(t3 * t3).epsilon(1e-13));
    CHECK(theta2_direct({1.0, {0, 1}, {}}) == doctest::Approx(1.18034060).epsilon(1e-8));
    CHECK(theta2_direct({1.0, {1, 1}, {}}) == doctest::Approx(theta2_direct({1.0, {0, 1}, {}})).epsilon(1e-14));
    CHECK(theta2_expansion({1.0, {0, 1}, {}}) == doctest::Approx(1.18034060).epsilon(1e-8));
}

TEST_CASE("hexagonal beats square") {
    const ModuliPoint hex{0.5, std::sqrt(3.0) / 2.0};
    CHECK(theta2_direct({2.0, hex, {}}) < theta2_direct({2.0, {0, 1}, {}}));
    CHECK(oracle::theta2(2.0, hex.x, hex.y) < oracle::theta2(2.0, 0.0, 1.0));
}

TEST_CASE("direct and expansion forms agree with brute force") {
    CHECK(theta2_expansion({1.5, {0.3, 1.2}, {}}) == doctest::Approx(theta2_direct({1.5, {0.3, 1.2}, {}})).epsilon(1e-11));
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ua(0.3, 6.0), ux(-1, 1), uy(0.4, 3);
    for (int i = 0; i < 50; ++i) {
        const double a = ua(rng), x = ux(rng), y = uy(rng);
        const double ref = oracle::theta2(a, x, y);
        CHECK(oracle::rel(theta2_direct({a, {x, y}, {}}), ref) < 1e-12);
        CHECK(oracle::rel(theta2_expansion({a, {x, y}, {}}), ref) < 1e-11);
    }
}

TEST_CASE("tall lattice is dominated by the n = 0 row") {
    const double a = 1.0, y = 3.0;
    const double t0 = theta1({0, 0}, y / a, 0.0);
    const double head = std::sqrt(y / a) * t0;
    const double full = theta2_expansion({a, {0.2, y}, {}});
    // Each n >= 1 row carries exp(-pi a y n^2) <= exp(-3 pi) relative to the n = 0 weight.
    CHECK(std::fabs(full - head) / (2.0 * head) < 1.001 * std::exp(-3.0 * oracle::kPi));
    CHECK(std::fabs(full - head) / (2.0 * head) > 0.9 * std::exp(-3.0 * oracle::kPi) * std::fabs(std::cos(0.4 * oracle::kPi)));
}

TEST_CASE("enumeration visits every vector once") {
    long count = 0;
    double s = 0;
    for_each_lattice_vector({0.3, 1.1}, 12.0, [&](long, long, double Q) {
        ++count;
        s += Q;
    });
    long ref = 0;
    oracle::lattice_sum(0.3, 1.1, 12.0, [&](long double) {
        ++ref;
        return 0.0L;
    });
    CHECK(count == ref);
}

TEST_CASE("errors") {
    CHECK_THROWS_AS(theta2_direct({0.0, {0, 1}, {}}), LatticeError);
    CHECK_THROWS_AS(theta2_direct({-1.0, {0, 1}, {}}), LatticeError);
    CHECK_THROWS_AS(theta2_direct({1.0, {0, -1}, {}}), LatticeError);
}
