#include "lattice/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

#include "lattice/energy.hpp"
#include "lattice/errors.hpp"
#include "lattice/parallel.hpp"
#include "lattice/theta2d.hpp"

namespace lattice {

namespace {

const double kHexY = std::sqrt(3.0) / 2.0;

struct Vertex {
    double x, y, f;
};

double diameter(const std::array<Vertex, 3>& s) {
    double d = 0.0;
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) d = std::max(d, std::hypot(s[i].x - s[j].x, s[i].y - s[j].y));
    }
    return d;
}

}  // namespace

const char* functional_name(FunctionalKind kind) {
    switch (kind) {
        case FunctionalKind::Theta: return "theta";
        case FunctionalKind::R: return "R";
        case FunctionalKind::Generalized: return "generalized";
        case FunctionalKind::Corollary: return "corollary";
    }
    return "?";
}

FunctionalKind parse_functional(const std::string& name) {
    for (auto k : {FunctionalKind::Theta, FunctionalKind::R, FunctionalKind::Generalized, FunctionalKind::Corollary}) {
        if (name == functional_name(k)) return k;
    }
    throw LatticeError(Errc::InvalidArgument, "unknown functional " + name);
}

std::string functional_id(const Functional& f) {
    switch (f.kind) {
        case FunctionalKind::Generalized: return "generalized(k=" + std::to_string(f.k) + ")";
        case FunctionalKind::Corollary: {
            char buf[64];
            std::snprintf(buf, sizeof buf, "corollary(beta=%.12g)", f.beta);
            return buf;
        }
        default: return functional_name(f.kind);
    }
}

double evaluate(const Functional& f, double alpha, const ModuliPoint& z, const SeriesTruncation& trunc) {
    switch (f.kind) {
        case FunctionalKind::Theta: return theta2_direct(ThetaParams{alpha, z, trunc});
        case FunctionalKind::R: return energy_R(alpha, z, trunc);
        case FunctionalKind::Generalized: return energy_generalized(f.k, alpha, z, trunc);
        case FunctionalKind::Corollary: return energy_corollary(alpha, f.beta, z, trunc);
    }
    throw LatticeError(Errc::InvalidArgument, "unknown functional");
}

MinimizeResult minimize(const Functional& f, double alpha, const MinimizeOptions& opts) {
    require_positive_alpha(alpha);
    validate(opts.trunc);
    if (opts.grid < 2 || !(opts.y_max > kHexY) || !(opts.simplex_tol > 0) || opts.max_iterations < 1) {
        throw LatticeError(Errc::InvalidArgument, "bad minimize options");
    }
    // Parameter errors surface here rather than inside a worker.
    const double hex_value = evaluate(f, alpha, hexagonal_point(), opts.trunc);

    // Outside the upper half-plane the objective is +inf; elsewhere the value is
    // modular invariant, so the simplex may wander past the domain edges.
    auto objective = [&](double x, double y) {
        if (!(y > 1e-3)) return std::numeric_limits<double>::infinity();
        return evaluate(f, alpha, reduce_to_fundamental(ModuliPoint{x, y}).first, opts.trunc);
    };

    double x0, y0, step;
    if (opts.start) {
        validate(*opts.start);
        x0 = opts.start->x;
        y0 = opts.start->y;
        step = opts.start_step;
    } else {
        const int g = opts.grid;
        const double ylo = 0.9 * kHexY;
        std::vector<ModuliPoint> nodes;
        for (int i = 0; i < g; ++i) {
            for (int j = 0; j < g; ++j) {
                const ModuliPoint z{0.5 * i / (g - 1), ylo + (opts.y_max - ylo) * j / (g - 1)};
                if (std::hypot(z.x, z.y) >= 0.98) nodes.push_back(z);
            }
        }
        std::vector<double> vals(nodes.size());
        parallel_for(nodes.size(), [&](std::size_t i) { vals[i] = evaluate(f, alpha, nodes[i], opts.trunc); });
        const auto best = std::min_element(vals.begin(), vals.end()) - vals.begin();
        x0 = nodes[best].x;
        y0 = nodes[best].y;
        step = 0.5 / (g - 1);
    }

    std::array<Vertex, 3> s{Vertex{x0, y0, 0}, Vertex{x0 + step, y0, 0}, Vertex{x0, y0 + step, 0}};
    for (auto& v : s) v.f = objective(v.x, v.y);

    int it = 0;
    bool converged = false;
    for (; it < opts.max_iterations; ++it) {
        std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.f < b.f; });
        if (diameter(s) < opts.simplex_tol) {
            converged = true;
            break;
        }
        const double cx = 0.5 * (s[0].x + s[1].x), cy = 0.5 * (s[0].y + s[1].y);
        auto at = [&](double t) {
            Vertex v{cx + t * (s[2].x - cx), cy + t * (s[2].y - cy), 0};
            v.f = objective(v.x, v.y);
            return v;
        };
        const Vertex r = at(-1.0);
        if (r.f < s[0].f) {
            const Vertex e = at(-2.0);
            s[2] = e.f < r.f ? e : r;
        } else if (r.f < s[1].f) {
            s[2] = r;
        } else {
            const Vertex c = r.f < s[2].f ? at(-0.5) : at(0.5);
            if (c.f < std::min(r.f, s[2].f)) {
                s[2] = c;
            } else {
                for (int i = 1; i < 3; ++i) {
                    s[i].x = s[0].x + 0.5 * (s[i].x - s[0].x);
                    s[i].y = s[0].y + 0.5 * (s[i].y - s[0].y);
                    s[i].f = objective(s[i].x, s[i].y);
                }
            }
        }
    }
    if (!converged) {
        throw LatticeError(Errc::NoConvergence,
                           "simplex still " + std::to_string(diameter(s)) + " wide after " + std::to_string(it) + " steps");
    }

    MinimizeResult res;
    res.argmin = reduce_to_fundamental(ModuliPoint{s[0].x, s[0].y}).first;
    res.value = s[0].f;
    // The grid may land on the hexagonal corner exactly; report the smaller.
    if (hex_value < res.value && std::hypot(res.argmin.x - 0.5, res.argmin.y - kHexY) < 1e-6) {
        res.value = hex_value;
    }
    res.iterations = it;
    res.converged = true;
    res.functional_id = functional_id(f);
    res.alpha = alpha;
    res.beta = f.kind == FunctionalKind::Corollary ? f.beta : 0.0;
    res.k = f.kind == FunctionalKind::Generalized ? f.k : (f.kind == FunctionalKind::R ? 2 : 0);
    return res;
}

std::pair<double, double> minimize_on_gamma(const Functional& f, double alpha, const MinimizeOptions& opts) {
    require_positive_alpha(alpha);
    validate(opts.trunc);
    if (!(opts.y_max > kHexY) || !(opts.golden_tol > 0)) throw LatticeError(Errc::InvalidArgument, "bad gamma options");
    auto g = [&](double y) { return evaluate(f, alpha, ModuliPoint{0.5, y}, opts.trunc); };
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = kHexY, b = opts.y_max;
    double c = b - r * (b - a), d = a + r * (b - a);
    double fc = g(c), fd = g(d);
    while (b - a > opts.golden_tol) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = g(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = g(d);
        }
    }
    // Compare the bracket midpoint against the two ends so a boundary minimum is exact.
    double ys = 0.5 * (a + b), best = g(ys);
    for (double e : {kHexY, opts.y_max}) {
        const double v = g(e);
        if (v < best) {
            best = v;
            ys = e;
        }
    }
    return {ys, best};
}

double hexagonal_gap(const Functional& f, double alpha, const ModuliPoint& z, const SeriesTruncation& trunc) {
    validate(z);
    return evaluate(f, alpha, z, trunc) - evaluate(f, alpha, hexagonal_point(), trunc);
}

}  // namespace lattice
