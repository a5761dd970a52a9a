#pragma once

#include <optional>
#include <string>
#include <utility>

#include "lattice/moduli.hpp"
#include "lattice/theta1d.hpp"

namespace lattice {

enum class FunctionalKind { Theta, R, Generalized, Corollary };

struct Functional {
    FunctionalKind kind = FunctionalKind::R;
    int k = 2;          // Generalized only
    double beta = 0.0;  // Corollary only
};

const char* functional_name(FunctionalKind kind);
FunctionalKind parse_functional(const std::string& name);
std::string functional_id(const Functional& f);

// Value of the functional at z; checks alpha > 0 and the k/beta preconditions.
double evaluate(const Functional& f, double alpha, const ModuliPoint& z, const SeriesTruncation& trunc = {});

struct MinimizeOptions {
    int grid = 48;
    double y_max = 4.0;
    double simplex_tol = 1e-7;
    int max_iterations = 4000;
    double golden_tol = 1e-9;
    // Skips the grid phase and starts the simplex here with edge `start_step`.
    std::optional<ModuliPoint> start;
    double start_step = 0.02;
    SeriesTruncation trunc;
};

struct MinimizeResult {
    ModuliPoint argmin;
    double value = 0.0;
    int iterations = 0;
    bool converged = false;
    std::string functional_id;
    double alpha = 0.0;
    double beta = 0.0;
    int k = 0;
};

// Coarse grid over the truncated fundamental domain, then Nelder-Mead in (x, y).
// Throws NoConvergence when the iteration cap is hit.
MinimizeResult minimize(const Functional& f, double alpha, const MinimizeOptions& opts = {});

// Golden-section search along x = 1/2, y in [sqrt(3)/2, y_max]. Returns (y*, value).
std::pair<double, double> minimize_on_gamma(const Functional& f, double alpha, const MinimizeOptions& opts = {});

// value(z) - value(hexagonal point)
double hexagonal_gap(const Functional& f, double alpha, const ModuliPoint& z, const SeriesTruncation& trunc = {});

}  // namespace lattice
