#pragma once

#include <functional>

#include "lattice/moduli.hpp"
#include "lattice/theta1d.hpp"

namespace lattice {

struct ThetaParams {
    double alpha = 1.0;
    ModuliPoint z;
    SeriesTruncation trunc;
};

void require_positive_alpha(double alpha);

// Largest |mz+n|^2/Im(z) that must be visited so that the omitted tail of
// sum Q^k exp(-pi alpha Q) stays below the relative tolerance.
double lattice_norm_cutoff(double alpha, const ModuliPoint& z, int k, const SeriesTruncation& trunc);

// Calls f(m, n, Q) for every (m, n) != (0, 0) with Q = |mz+n|^2/Im(z) <= q_max,
// rows in ascending m, entries in ascending n.
void for_each_lattice_vector(const ModuliPoint& z, double q_max,
                             const std::function<void(long, long, double)>& f);

// sum over Z^2 of exp(-pi alpha |mz+n|^2 / Im(z)).
double theta2_direct(const ThetaParams& p);

// 2 sqrt(y/alpha) sum_{n>=1} exp(-alpha pi y n^2) theta(y/alpha; n x)
//   + sqrt(y/alpha) theta(y/alpha; 0)
double theta2_expansion(const ThetaParams& p);

}  // namespace lattice
