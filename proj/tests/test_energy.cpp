#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "lattice/energy.hpp"
#include "lattice/errors.hpp"
#include "lattice/theta2d.hpp"
#include "oracles.hpp"

using namespace lattice;

namespace {
const double kHexY = std::sqrt(3.0) / 2.0;
const ModuliPoint kHex{0.5, kHexY};
}

TEST_CASE("energy sums against brute force") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ua(0.5, 6.0), ux(-0.5, 0.5), uy(0.7, 2.5);
    for (int i = 0; i < 30; ++i) {
        const double a = ua(rng), x = ux(rng), y = uy(rng);
        CHECK(oracle::rel(energy_R(a, {x, y}), oracle::energy_R(a, x, y)) < 1e-12);
        CHECK(oracle::rel(energy_generalized(3, a, {x, y}), oracle::energy_pow(3, a, x, y)) < 1e-12);
        CHECK(oracle::rel(energy_generalized(1, a, {x, y}), oracle::energy_pow(1, a, x, y)) < 1e-12);
        CHECK(energy_generalized(2, a, {x, y}) == energy_R(a, {x, y}));
        CHECK(oracle::rel(energy_corollary(a, a + 1.0, {x, y}), oracle::energy_corollary(a, a + 1.0, x, y)) < 1e-12);
    }
    CHECK(energy_R(1.5, kHex) < energy_R(1.5, {0, 1}));
    CHECK(energy_R(2.0, {0.3, 1.1}) == energy_R(2.0, reduce_to_fundamental({0.3, 1.1}).first));
}

TEST_CASE("R is the scaled second alpha-derivative of theta") {
    for (auto [a, x, y] : {std::tuple{2.0, 0.3, 1.1}, std::tuple{1.5, 0.5, kHexY}, std::tuple{4.0, 0.1, 2.0}}) {
        auto th = [&](double s) { return theta2_direct({s, {x, y}, {}}); };
        const double fd = oracle::d2(th, a, 1e-3) / (oracle::kPi * oracle::kPi);
        CHECK(oracle::rel(energy_R(a, {x, y}), fd) < 1e-6);
    }
}

TEST_CASE("corollary functional is an alpha-integral of R") {
    for (double x : {0.0, 0.2, 0.5}) {
        const ModuliPoint z{x, 1.3};
        const double direct = energy_corollary(1.5, 2.5, z);
        CHECK(oracle::rel(energy_corollary_quadrature(1.5, 2.5, z), direct) < 1e-7);
        const double simpson =
            oracle::kPi * oracle::simpson([&](double g) { return oracle::energy_R(g, x, 1.3); }, 1.5, 2.5, 200);
        CHECK(oracle::rel(direct, simpson) < 1e-7);
    }
    const double eps = 1e-6;
    CHECK(energy_corollary(1.5, 1.5 + eps, kHex) == doctest::Approx(eps * oracle::kPi * energy_R(1.5, kHex)).epsilon(1e-5));
    CHECK(energy_corollary(1.5, 2.5, kHex) < energy_corollary(1.5, 2.5, {0, 1}));
}

TEST_CASE("x-derivative and its decomposition") {
    const double a = 2.0;
    const ModuliPoint z{0.25, 1.3};
    const auto [v, d] = dR_dx(a, z);
    auto fx = [&](double x) { return oracle::energy_R(a, x, z.y); };
    CHECK(oracle::rel(v, oracle::d1(fx, z.x, 1e-4)) < 1e-6);
    CHECK(v < 0);
    CHECK(d.Phi_A > 0);
    CHECK(std::fabs((d.Phi_B[0] + d.Phi_B[1] + d.Phi_B[2]) / d.Phi_A) <= 1.0 / 77.0);
    CHECK(reassemble(d) == doctest::Approx(v).epsilon(1e-12));
    CHECK_THROWS_AS(dR_dx(a, {0.0, 1.3}), LatticeError);
    CHECK_THROWS_AS(dR_dx(a, {0.5, 1.3}), LatticeError);
}

TEST_CASE("y-derivative on the line x = 1/2") {
    CHECK(std::fabs(dR_dy_line(1.5, kHexY).first) < 1e-8);
    const auto [v, d] = dR_dy_line(2.0, 1.1);
    auto fy = [](double y) { return oracle::energy_R(2.0, 0.5, y); };
    CHECK(oracle::rel(v, oracle::d1(fy, 1.1, 1e-4)) < 1e-6);
    CHECK(v > 0);
    CHECK(reassemble(d) == doctest::Approx(v).epsilon(1e-12));
}

TEST_CASE("radial operator") {
    const double a = 1.5, y = 0.9;
    const auto [v, w] = radial_operator(a, y);
    auto fy = [&](double s) { return oracle::energy_R(a, 0.5, s); };
    const double fd = oracle::d2(fy, y, 1e-3) + (2.0 / y) * oracle::d1(fy, y, 1e-3);
    CHECK(oracle::rel(v, fd) < 1e-5);
    CHECK(v >= 77.0 / (50.0 * std::pow(y, 4)) * std::exp(-oracle::kPi * a / y));
    CHECK(reassemble(w, a, y) == doctest::Approx(v).epsilon(1e-12));
}

TEST_CASE("parameter errors") {
    CHECK_THROWS_AS(energy_R(0.0, kHex), LatticeError);
    CHECK_THROWS_AS(energy_generalized(0, 1.0, kHex), LatticeError);
    CHECK_THROWS_AS(energy_corollary(2.0, 1.5, kHex), LatticeError);
    try {
        energy_generalized(0, 1.0, kHex);
    } catch (const LatticeError& e) {
        CHECK(e.code() == Errc::NonPositiveK);
    }
    try {
        energy_corollary(2.0, 2.0, kHex);
    } catch (const LatticeError& e) {
        CHECK(e.code() == Errc::OrderViolation);
    }
}
