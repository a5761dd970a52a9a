#pragma once

#include <utility>
#include <vector>

namespace lattice {

// z = x + iy in the upper half-plane; parametrizes the unit-density lattice
// (Z + zZ) / sqrt(y).
struct ModuliPoint {
    double x = 0.0;
    double y = 1.0;
};

// Throws InvalidPoint unless y > 0 and both components are finite.
ModuliPoint make_point(double x, double y);
void validate(const ModuliPoint& z);

ModuliPoint hexagonal_point();

enum class Generator { TranslatePlus, TranslateMinus, Invert, Reflect };

const char* generator_name(Generator g);

struct ReductionTrace {
    std::vector<Generator> steps;
    ModuliPoint input;
    ModuliPoint output;
};

constexpr int kReductionMaxSteps = 64;
constexpr double kRealAxisGuard = 1e-14;

// |mz+n|^2 / Im(z)
double lattice_norm_sq(const ModuliPoint& z, long m, long n);

ModuliPoint apply_generator(Generator g, const ModuliPoint& z);
ModuliPoint apply_word(const std::vector<Generator>& word, const ModuliPoint& z);

// Maps z into the closure of {0 <= x <= 1/2, |z| >= 1}.
std::pair<ModuliPoint, ReductionTrace> reduce_to_fundamental(const ModuliPoint& z);

bool in_fundamental_domain(const ModuliPoint& z, bool closed);

}  // namespace lattice
