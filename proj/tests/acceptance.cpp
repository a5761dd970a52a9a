// One pass/fail line per acceptance criterion. Exit status is nonzero if any fails.
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "lattice/bounds.hpp"
#include "lattice/cli.hpp"
#include "lattice/energy.hpp"
#include "lattice/moduli.hpp"
#include "lattice/optimize.hpp"
#include "lattice/theta1d.hpp"
#include "lattice/theta2d.hpp"
#include "oracles.hpp"

using namespace lattice;

namespace {

const double kHexY = std::sqrt(3.0) / 2.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Records the worst observed error against a limit.
struct Worst {
    std::string label;
    double limit;
    double value = 0.0;
    void see(double e) { value = std::max(value, std::isnan(e) ? INFINITY : e); }
    bool ok() const { return value <= limit; }
    std::string str() const {
        char buf[128];
        std::snprintf(buf, sizeof buf, "%s %.2e/%.0e", label.c_str(), value, limit);
        return buf;
    }
};

Outcome combine(std::initializer_list<Worst> ws) {
    Outcome o;
    for (const auto& w : ws) {
        o.pass = o.pass && w.ok();
        o.detail += (o.detail.empty() ? "" : ", ") + w.str();
    }
    return o;
}

Outcome constants() {
    Outcome o;
    for (const auto& r : reference_constants()) {
        if (!(r.abs_diff <= r.allowed)) {
            o.pass = false;
            char buf[200];
            std::snprintf(buf, sizeof buf, "%s%s off by %.3e (allowed %.0e)", o.detail.empty() ? "" : "; ",
                          r.name.c_str(), r.abs_diff, r.allowed);
            o.detail += buf;
        }
    }
    if (o.pass) o.detail = "all 7 rows within tolerance";
    return o;
}

Outcome representations() {
    Worst poisson{"fourier-vs-comb", 1e-12}, oracle_w{"vs-bruteforce", 1e-12}, product{"product", 1e-12},
        expansion{"2d-expansion", 1e-11}, transform{"transformations", 1e-12};
    for (int i = 0; i < 40; ++i) {
        const double X = 0.05 + (5.0 - 0.05) * i / 39.0;
        for (int j = 0; j < 40; ++j) {
            const double Y = j / 39.0;
            const double f = theta1_fourier({0, 0}, X, Y), p = theta1_poisson({0, 0}, X, Y);
            poisson.see(std::fabs(f - p));
            oracle_w.see(std::fabs(theta1({0, 0}, X, Y) - oracle::theta1(0, 0, X, Y)));
            if (X >= 0.2) product.see(std::fabs(theta1_product(X, Y) - oracle::theta1(0, 0, X, Y)));
        }
    }
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> ua(0.5, 5.0), ux(-0.5, 0.5), uy(0.7, 3.0);
    for (int i = 0; i < 50; ++i) {
        const ThetaParams p{ua(rng), {ux(rng), uy(rng)}, {}};
        expansion.see(oracle::rel(theta2_expansion(p), theta2_direct(p)));
    }
    for (int i = 0; i < 20; ++i) {
        const double X = 0.1 + 0.15 * i;
        const double s = std::sqrt(X);
        transform.see(std::fabs(classical_theta(3, 1.0 / X, 0) - s * classical_theta(3, X, 0)));
        transform.see(std::fabs(classical_theta(4, X, 0) - classical_theta(2, 1.0 / X, 0) / s));
    }
    return combine({poisson, oracle_w, product, expansion, transform});
}

Outcome calculus() {
    Worst r_fd{"R-vs-d2theta", 1e-6}, dx{"dRdx", 1e-6}, dy{"dRdy", 1e-6}, rad{"radial", 1e-5}, cor{"corollary", 1e-7};
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ua(1.0, 4.0), ux(0.05, 0.45), uy(0.9, 2.0), uyl(0.95, 2.5);
    for (int i = 0; i < 20; ++i) {
        const double a = ua(rng), x = ux(rng), y = uy(rng);
        auto th = [&](double s) { return theta2_direct({s, {x, y}, {}}); };
        r_fd.see(oracle::rel(energy_R(a, {x, y}), oracle::d2(th, a, 1e-3) / (oracle::kPi * oracle::kPi)));
        auto fx = [&](double s) { return oracle::energy_R(a, s, y); };
        dx.see(oracle::rel(dR_dx(a, {x, y}).first, oracle::d1(fx, x, 1e-3)));
        const double yl = uyl(rng);
        auto fy = [&](double s) { return oracle::energy_R(a, 0.5, s); };
        dy.see(oracle::rel(dR_dy_line(a, yl).first, oracle::d1(fy, yl, 1e-3)));
        const double fd = oracle::d2(fy, yl, 1e-3) + (2.0 / yl) * oracle::d1(fy, yl, 1e-3);
        rad.see(oracle::rel(radial_operator(a, yl).first, fd));
    }
    for (auto [x, y] : {std::pair{0.0, 1.0}, {0.5, kHexY}, {0.2, 1.3}, {0.35, 1.8}, {0.1, 2.5}}) {
        cor.see(oracle::rel(energy_corollary(1.5, 2.5, {x, y}), energy_corollary_quadrature(1.5, 2.5, {x, y})));
    }
    return combine({r_fd, dx, dy, rad, cor});
}

Outcome symmetry() {
    Worst th{"theta", 1e-10}, r{"R", 1e-10};
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ua(0.5, 5.0), ux(-1.0, 1.0), uy(0.5, 2.0);
    std::uniform_int_distribution<int> ug(0, 3);
    const Generator gens[] = {Generator::TranslatePlus, Generator::TranslateMinus, Generator::Invert, Generator::Reflect};
    for (int i = 0; i < 100; ++i) {
        const double a = ua(rng);
        const ModuliPoint z{ux(rng), uy(rng)};
        const double t0 = theta2_direct({a, z, {}}), r0 = energy_R(a, z);
        std::vector<std::vector<Generator>> words;
        for (auto g : gens) words.push_back({g});
        std::vector<Generator> w;
        for (int k = 0; k < 4; ++k) w.push_back(gens[ug(rng)]);
        words.push_back(w);
        for (const auto& word : words) {
            const ModuliPoint zz = apply_word(word, z);
            th.see(oracle::rel(theta2_direct({a, zz, {}}), t0));
            r.see(oracle::rel(energy_R(a, zz), r0));
        }
    }
    return combine({th, r});
}

Outcome hexagonal_minimality() {
    Worst argmin{"argmin", 1e-4}, stationary{"dRdy(hex)", 1e-8}, gap{"-hex_gap", 1e-10};
    const Functional R{FunctionalKind::R};
    for (double a : {1.5, 2.0, 3.0, 5.0}) {
        const auto m = minimize(R, a);
        argmin.see(std::max(std::fabs(m.argmin.x - 0.5), std::fabs(m.argmin.y - kHexY)));
    }
    const auto t = minimize({FunctionalKind::Theta}, 1.0);
    argmin.see(std::max(std::fabs(t.argmin.x - 0.5), std::fabs(t.argmin.y - kHexY)));
    for (double a : {1.5, 2.0, 3.0}) stationary.see(std::fabs(dR_dy_line(a, kHexY).first));

    long nodes = 0, positive = 0;
    for (double a : {1.5, 2.0, 3.0, 6.0}) {
        const int n = 32;
        for (int j = 0; j < n; ++j) {
            const double y = kHexY + (4.0 - kHexY) * (j + 0.5) / n;
            const double lo = std::sqrt(std::max(0.0, 1.0 - y * y));
            for (int i = 0; i < n; ++i) {
                const double x = lo + (0.5 - lo) * (i + 0.5) / n;
                ++nodes;
                if (!(dR_dx(a, {x, y}).first < 0)) ++positive;
            }
        }
    }
    std::mt19937_64 rng(4242);
    for (double a : {1.5, 3.0}) {
        for (int i = 0; i < 500; ++i) {
            const auto [x, y] = oracle::random_reduced(rng, 4.0);
            gap.see(-hexagonal_gap(R, a, {x, y}));
        }
    }
    Outcome o = combine({argmin, stationary, gap});
    o.pass = o.pass && positive == 0;
    o.detail += ", dRdx>=0 at " + std::to_string(positive) + "/" + std::to_string(nodes) + " grid nodes";
    return o;
}

Outcome lemma_suite() {
    Outcome o;
    int n = 0;
    long points = 0;
    for (const auto& c : list_checks()) {
        if (c.proof_step) continue;
        const auto rep = check_inequality(c.id, default_region(c.id));
        ++n;
        points += rep.points_tested;
        if (!rep.violations.empty()) {
            o.pass = false;
            o.detail += c.id + " (" + std::to_string(rep.violations.size()) + " violations) ";
        }
    }
    if (o.pass) o.detail = std::to_string(n) + " checks, " + std::to_string(points) + " points, no violations";
    return o;
}

std::string capture(const std::string& cmd) {
    std::string out;
    if (FILE* p = popen(cmd.c_str(), "r")) {
        std::array<char, 4096> buf;
        std::size_t k;
        while ((k = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), k);
        pclose(p);
    }
    return out;
}

Outcome determinism(const std::string& tool) {
    const std::vector<std::vector<std::string>> cmds = {
        {"landscape", "--functional", "R", "--alpha", "1.5", "--xrange", "0,0.5", "--yrange", "0.85,2", "--res", "50"},
        {"verify", "--lemma", "all", "--grid", "16"},
        {"constants"},
    };
    Outcome o;
    int compared = 0;
    for (const auto& args : cmds) {
        std::ostringstream a, b, e;
        run(args, a, e);
        run(args, b, e);
        ++compared;
        if (a.str() != b.str() || a.str().empty()) {
            o.pass = false;
            o.detail += "in-process " + args[0] + " differs; ";
        }
        if (!tool.empty()) {
            std::string cmd = tool;
            for (const auto& s : args) cmd += " " + s;
            cmd += " 2>/dev/null";
            const auto p1 = capture(cmd), p2 = capture(cmd);
            ++compared;
            if (p1 != p2 || p1 != a.str()) {
                o.pass = false;
                o.detail += "process " + args[0] + " differs; ";
            }
        }
    }
    if (o.pass) o.detail = std::to_string(compared) + " output pairs byte-identical";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    const std::string tool = argc > 1 ? argv[1] : "";
    struct Criterion {
        int id;
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {1, "constants regression", 1.0, constants},
        {2, "representation oracles", 10.0, representations},
        {3, "calculus oracles", 30.0, calculus},
        {4, "symmetry", 10.0, symmetry},
        {5, "hexagonal minimality", 240.0, hexagonal_minimality},
        {6, "lemma verification suite", 300.0, lemma_suite},
        {7, "determinism", 60.0, [&] { return determinism(tool); }},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool in_time = dt <= c.budget_s;
        const bool ok = o.pass && in_time;
        failed += !ok;
        std::printf("criterion %d %-26s %s  %.2fs/%.0fs  %s%s\n", c.id, c.name, ok ? "PASS" : "FAIL", dt, c.budget_s,
                    o.detail.c_str(), in_time ? "" : " [over time budget]");
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
