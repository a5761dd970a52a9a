#include "lattice/moduli.hpp"

#include <cmath>
#include <string>

#include "lattice/errors.hpp"

namespace lattice {

namespace {

// Largest single translation stride recorded generator by generator.
constexpr double kMaxStride = 1e6;
// |z|^2 within this of 1 counts as on the unit circle.
constexpr double kCircleSlack = 1e-14;
constexpr double kClosedSlack = 1e-12;

// Nearest integer with ties toward zero.
double round_ties_to_zero(double x) {
    return x > 0 ? std::ceil(x - 0.5) : std::floor(x + 0.5);
}

}  // namespace

void validate(const ModuliPoint& z) {
    if (!std::isfinite(z.x) || !std::isfinite(z.y) || !(z.y > 0)) {
        throw LatticeError(Errc::InvalidPoint,
                           "point (" + std::to_string(z.x) + ", " + std::to_string(z.y) +
                               ") is not in the upper half-plane");
    }
}

ModuliPoint make_point(double x, double y) {
    ModuliPoint z{x, y};
    validate(z);
    return z;
}

ModuliPoint hexagonal_point() { return {0.5, std::sqrt(3.0) / 2.0}; }

const char* generator_name(Generator g) {
    switch (g) {
        case Generator::TranslatePlus: return "T+";
        case Generator::TranslateMinus: return "T-";
        case Generator::Invert: return "S";
        case Generator::Reflect: return "R";
    }
    return "?";
}

double lattice_norm_sq(const ModuliPoint& z, long m, long n) {
    const double a = static_cast<double>(m) * z.x + static_cast<double>(n);
    const double b = static_cast<double>(m) * z.y;
    return (a * a + b * b) / z.y;
}

ModuliPoint apply_generator(Generator g, const ModuliPoint& z) {
    switch (g) {
        case Generator::TranslatePlus: return {z.x + 1.0, z.y};
        case Generator::TranslateMinus: return {z.x - 1.0, z.y};
        case Generator::Invert: {
            const double r2 = z.x * z.x + z.y * z.y;
            return {-z.x / r2, z.y / r2};
        }
        case Generator::Reflect: return {-z.x, z.y};
    }
    return z;
}

ModuliPoint apply_word(const std::vector<Generator>& word, const ModuliPoint& z) {
    ModuliPoint w = z;
    for (Generator g : word) w = apply_generator(g, w);
    return w;
}

std::pair<ModuliPoint, ReductionTrace> reduce_to_fundamental(const ModuliPoint& z) {
    validate(z);
    if (z.y < kRealAxisGuard) {
        throw LatticeError(Errc::IterationLimitExceeded, "point too close to the real axis");
    }
    ReductionTrace trace;
    trace.input = z;
    ModuliPoint w = z;
    auto push = [&](Generator g) {
        w = apply_generator(g, w);
        trace.steps.push_back(g);
    };

    for (int iter = 0;; ++iter) {
        if (iter >= kReductionMaxSteps) {
            throw LatticeError(Errc::IterationLimitExceeded,
                               "reduction did not settle within " +
                                   std::to_string(kReductionMaxSteps) + " steps");
        }
        const double k = round_ties_to_zero(w.x);
        if (std::fabs(k) > kMaxStride) {
            throw LatticeError(Errc::IterationLimitExceeded, "translation stride too large");
        }
        const Generator t = k > 0 ? Generator::TranslateMinus : Generator::TranslatePlus;
        for (long i = 0; i < static_cast<long>(std::fabs(k)); ++i) push(t);
        if (w.x * w.x + w.y * w.y < 1.0 - kCircleSlack) {
            push(Generator::Invert);
            continue;
        }
        break;
    }
    if (w.x < 0) push(Generator::Reflect);
    trace.output = w;
    return {w, trace};
}

bool in_fundamental_domain(const ModuliPoint& z, bool closed) {
    const double r2 = z.x * z.x + z.y * z.y;
    if (closed) {
        return z.x >= -kClosedSlack && z.x <= 0.5 + kClosedSlack && r2 >= 1.0 - kClosedSlack;
    }
    return z.x > 0 && z.x < 0.5 && r2 > 1.0;
}

}  // namespace lattice
