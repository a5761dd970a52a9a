#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "lattice/cli.hpp"
#include "oracles.hpp"

using namespace lattice;

namespace {
struct Out {
    int code;
    std::string out, err;
};
Out call(std::vector<std::string> args) {
    std::ostringstream o, e;
    const int c = run(args, o, e);
    return {c, o.str(), e.str()};
}
std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) v.push_back(l);
    return v;
}
}  // namespace

TEST_CASE("eval prints twelve significant digits") {
    const auto r = call({"eval", "--functional", "R", "--alpha", "1.5", "--z", "0.5,0.8660254"});
    CHECK(r.code == 0);
    const double v = std::stod(r.out);
    CHECK(oracle::rel(v, oracle::energy_R(1.5, 0.5, 0.8660254)) < 1e-11);
}

TEST_CASE("reduce prints point and word") {
    const auto r = call({"reduce", "--z", "1.7,0.8"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == "point 0.41095890411,1.09589041096");
    CHECK(l[1].rfind("word ", 0) == 0);
    // The printed point round-trips at 12 digits.
    const auto back = call({"reduce", "--z", l[0].substr(6)});
    CHECK(lines(back.out)[0] == l[0]);
}

TEST_CASE("landscape CSV") {
    const auto r = call({"landscape", "--functional", "R", "--alpha", "1.5", "--xrange", "0,0.5", "--yrange", "0.85,2",
                         "--res", "50"});
    CHECK(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 2501);
    CHECK(l[0] == "x,y,value");
    double best = INFINITY, bx = 0, by = 0;
    for (std::size_t i = 1; i < l.size(); ++i) {
        double x, y, v;
        std::sscanf(l[i].c_str(), "%lf,%lf,%lf", &x, &y, &v);
        if (v < best) {
            best = v;
            bx = x;
            by = y;
        }
    }
    CHECK(std::fabs(bx - 0.5) <= 0.5 / 49 + 1e-12);
    CHECK(std::fabs(by - 0.866) <= 1.15 / 49 + 1e-3);
    const auto again = call({"landscape", "--functional", "R", "--alpha", "1.5", "--xrange", "0,0.5", "--yrange", "0.85,2",
                             "--res", "50"});
    CHECK(again.out == r.out);
}

TEST_CASE("minimize and constants") {
    const auto m = call({"minimize", "--functional", "theta", "--alpha", "1"});
    CHECK(m.code == 0);
    const auto pos = m.out.find("argmin ");
    REQUIRE(pos != std::string::npos);
    double x = 0, y = 0;
    std::sscanf(m.out.c_str() + pos, "argmin %lf,%lf", &x, &y);
    CHECK(std::fabs(x - 0.5) < 1e-4);
    CHECK(std::fabs(y - std::sqrt(3.0) / 2.0) < 1e-4);
    const auto c = call({"constants"});
    CHECK(lines(c.out).size() == 8);
    CHECK(lines(c.out)[0] == "name,computed,printed,abs_diff,allowed");
}

TEST_CASE("verify") {
    const auto one = call({"verify", "--lemma", "comb_quintic_ratio_sup", "--grid", "8"});
    CHECK(one.code == 0);
    const auto l = lines(one.out);
    REQUIRE(l.size() == 2);
    CHECK(l[0] == "lemma_id,points,min_slack,worst_point,violations");
    CHECK(l[1].rfind("comb_quintic_ratio_sup,64,", 0) == 0);
    CHECK(one.err.find("1 checks") != std::string::npos);

    const auto all = call({"verify", "--lemma", "all", "--grid", "32"});
    CHECK(all.code == 0);

    const auto bad = call({"verify", "--lemma", "xxy_monotone_remainder_positive", "--grid", "8"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("VIOLATED") != std::string::npos);

    const auto custom = call({"verify", "--lemma", "comb_cubic_ratio_sup", "--grid", "8", "--region", "custom", "--range",
                              "X=0.25,0.5"});
    CHECK(custom.code == 0);
}

TEST_CASE("usage errors exit with 2 and name the flag") {
    auto r = call({});
    CHECK(r.code == 2);
    r = call({"eval", "--alpha", "-1", "--z", "0,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--alpha") != std::string::npos);
    r = call({"eval", "--alpha", "1", "--z", "0,abc"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--z") != std::string::npos);
    r = call({"eval", "--alpha", "1", "--z", "0,-1"});
    CHECK(r.code == 2);
    r = call({"landscape", "--alpha", "1", "--res", "1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--res") != std::string::npos);
    r = call({"eval", "--functional", "corollary", "--alpha", "2", "--beta", "1", "--z", "0,1"});
    CHECK(r.code == 2);
    CHECK(r.err.find("--beta") != std::string::npos);
    r = call({"verify", "--lemma", "nope"});
    CHECK(r.code == 2);
    r = call({"eval", "--alpha", "1", "--z", "0,1", "--bogus"});
    CHECK(r.code == 2);
}
