#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "lattice/bounds.hpp"
#include "lattice/errors.hpp"
#include "lattice/theta1d.hpp"
#include "oracles.hpp"

using namespace lattice;

namespace {
const double kHexY = std::sqrt(3.0) / 2.0;
}

TEST_CASE("named bound functions at reference points") {
    CHECK(region_function("psi", {kHexY}) == doctest::Approx(10.90887470).epsilon(1e-7));
    CHECK(region_function("g", {1.781450608}) == doctest::Approx(0.2141862029).epsilon(1e-6));
    CHECK(region_function("D1", {1.5, kHexY}) >= 21.0 / 50.0);
    // g has an interior minimum near t0.
    const double g0 = region_function("g", {1.781450608});
    for (double t : {0.8, 1.2, 1.6, 1.9, 2.5, 4.0, 8.0}) CHECK(region_function("g", {t}) >= g0);
}

TEST_CASE("region function errors") {
    CHECK_THROWS_AS(region_function("nope", {1.0}), LatticeError);
    try {
        region_function("D1", {1.0, 0.5});
        FAIL("expected OutOfRegion");
    } catch (const LatticeError& e) {
        CHECK(e.code() == Errc::OutOfRegion);
    }
    try {
        region_function("nope", {});
    } catch (const LatticeError& e) {
        CHECK(e.code() == Errc::UnknownFunction);
    }
}

TEST_CASE("every listed bound function evaluates inside its region") {
    for (const auto& f : list_region_functions()) {
        std::vector<double> args;
        for (const auto& p : f.params) {
            if (p == "alpha") args.push_back(2.0);
            else if (p == "y") args.push_back(1.5);
            else if (p == "t" || p == "r") args.push_back(1.6);
            else if (p == "a") args.push_back(3.0);
            else args.push_back(0.4);
        }
        if (f.id == "psi") args = {0.9};
        if (f.id == "D2") args = {2.5, 1.1};
        if (f.id == "D3" || f.id.rfind("Et", 0) == 0) args = {1.9, 0.9};
        if (f.id == "D4") args = {3.0, 0.9};
        if (f.id == "P" || f.id.rfind("I_a", 0) == 0 || (f.id[0] == 'J' && f.params[0] == "alpha")) args = {2.0, 1.7};
        INFO(f.id);
        CHECK(std::isfinite(region_function(f.id, args)));
    }
}

TEST_CASE("region bound sanity against brute-force thetas") {
    // Lemma-style quotient bound at one interior point, checked with the oracle.
    const double X = 0.7, Y = 0.3;
    const double q = oracle::theta1(1, 1, X, Y) / oracle::theta1(0, 1, X, Y);
    const double mu = aux_series(AuxSeries::Mu, X), nu = aux_series(AuxSeries::Nu, X);
    CHECK(std::fabs(q) <= oracle::kPi * (1 + nu) / (1 + mu));
}

TEST_CASE("check ids are unique and defaults are well formed") {
    std::set<std::string> ids;
    for (const auto& c : list_checks()) {
        CHECK(ids.insert(c.id).second);
        const auto r = default_region(c.id, 4);
        CHECK(r.param_ranges.size() == c.params.size());
        for (const auto& pr : r.param_ranges) CHECK(pr.lo < pr.hi);
    }
    for (const char* must : {"h_monotone_r", "D3_monotone_alpha", "psi_concave"}) CHECK(ids.count(must) == 1);
}

TEST_CASE("reports are deterministic and consistent") {
    const auto r1 = check_inequality("comb_quintic_ratio_sup", default_region("comb_quintic_ratio_sup", 16));
    const auto r2 = check_inequality("comb_quintic_ratio_sup", default_region("comb_quintic_ratio_sup", 16));
    CHECK(r1.points_tested == 256);
    CHECK(r1.min_slack == r2.min_slack);
    CHECK(r1.worst_point == r2.worst_point);
    CHECK(r1.violations.empty() == (r1.min_slack >= -kCheckTolerance));

    const auto ratio = check_inequality("phi_ratio_Aa", default_region("phi_ratio_Aa", 32));
    CHECK(ratio.violations.empty());
    CHECK(ratio.min_slack >= 0);
}

TEST_CASE("quintic comb ratio approaches 1/16 only as X -> 0 at Y = 1/2") {
    // At Y = 1/2 the two offsets u = +-1/2 dominate, giving (1/2)^4.
    CHECK(std::fabs(comb_moment_ratio(5, 0.5, 0.5)) == doctest::Approx(0.0540413).epsilon(1e-5));
    double prev = 0.0;
    for (double X : {0.2, 0.05, 0.01, 0.002}) {
        const double v = comb_moment_ratio(5, X, 0.5);
        CHECK(v <= 1.0 / 16.0);
        CHECK(v > prev);
        prev = v;
    }
    CHECK(prev > 0.99 / 16.0);
}

TEST_CASE("region validation") {
    auto spec = default_region("D1_lower", 8);
    spec.region_id = RegionId::Omega2;
    CHECK_THROWS_AS(check_inequality("D1_lower", spec), LatticeError);

    spec = default_region("D1_lower", 8);
    spec.region_id = RegionId::custom;
    spec.param_ranges = {{"alpha", 0.5, 1.0}, {"y", 0.9, 1.0}};
    try {
        check_inequality("D1_lower", spec);
        FAIL("expected RegionMismatch");
    } catch (const LatticeError& e) {
        CHECK(e.code() == Errc::RegionMismatch);
    }
    spec = default_region("D1_lower", 1);
    CHECK_THROWS_AS(check_inequality("D1_lower", spec), LatticeError);
    try {
        check_inequality("no_such_check", spec);
    } catch (const LatticeError& e) {
        CHECK(e.code() == Errc::UnknownLemma);
    }
    // A custom box inside the stated domain is accepted.
    spec = RegionSpec{{{"X", 0.25, 0.5}, {"Y", 0.0, 1.0}}, 8, RegionId::custom};
    CHECK(check_inequality("comb_cubic_ratio_sup", spec).violations.empty());
}

TEST_CASE("tightening the tolerance tenfold adds no violations on statement checks") {
    for (const auto& c : list_checks()) {
        if (c.proof_step) continue;
        const auto spec = default_region(c.id, 12);
        INFO(c.id);
        CHECK(check_inequality(c.id, spec, {}, kCheckTolerance / 10).violations.empty());
    }
}

TEST_CASE("published constants") {
    for (const auto& r : reference_constants()) {
        INFO(r.name);
        CHECK(r.abs_diff == doctest::Approx(std::fabs(r.computed - r.printed)));
        // Every row is at least within 2e-8 of its printed value.
        CHECK(r.abs_diff < 2e-8);
    }
}

TEST_CASE("cubic-quotient monotonicity step is looser than the lemma") {
    // The lemma statement holds on X >= 59/250, but the remainder estimate
    // used to prove it only turns positive near X = 0.2467.
    const double x0 = 59.0 / 250.0;
    CHECK(region_function("xxy_monotone_remainder", {x0}) < 0);
    CHECK(region_function("xxy_monotone_remainder", {0.2467}) > 0);
    for (double Y : {0.05, 0.2, 0.35, 0.45}) {
        auto q = [&](double s) { return oracle::theta1(2, 1, x0, s) / oracle::theta1(0, 1, x0, s); };
        CHECK(oracle::d1(q, Y, 1e-4) <= 0);
    }
}
