#pragma once

// Formula layer shared by the region-function table and the checks.

#include <array>

#include "lattice/theta1d.hpp"

namespace lattice::detail {

// Small exponential sums appearing in the lower bound for I_a.
struct EpsBar {
    double e0 = 0.0;
    double e1 = 0.0;
    double e2 = 0.0;
    double e3 = 0.0;
    double e4 = 0.0;
};

EpsBar eps_bar(double t, const SeriesTruncation& tr);
// Worst case of eps_bar over t >= 4/5; frozen into g and h.
EpsBar eps_bar_frozen(const SeriesTruncation& tr);

double phi_head(double alpha, double y);
double D1(double alpha, double y, const SeriesTruncation& tr);
double D2(double alpha, double y, const SeriesTruncation& tr);
double D3(double alpha, double y, const SeriesTruncation& tr);
double D4(double alpha, double y, const SeriesTruncation& tr);

// Envelopes for the three tail parts of Phi_B (index 0..2): series-side
// bounds valid for y/alpha >= 1/2, comb-side bounds for alpha >= 2y.
double E_envelope(int i, double alpha, double y, const SeriesTruncation& tr);
double Et_envelope(int i, double alpha, double y, const SeriesTruncation& tr);

double P_fn(double alpha, double y, const SeriesTruncation& tr);
std::array<double, 4> I_a_lower_parts(double alpha, double y, const SeriesTruncation& tr);
double h_fn(double r, double t, const EpsBar& e);
double g_fn(double t, const SeriesTruncation& tr);

double J1_envelope(double alpha, double y, const SeriesTruncation& tr);
double J2_envelope(double r, double t, const SeriesTruncation& tr);

double eps_a(double alpha, double y, const SeriesTruncation& tr);
double eps_b(double alpha, double y, const SeriesTruncation& tr);
double eps_c(double alpha, double y, const SeriesTruncation& tr);
double Y_fn(double alpha, double y, const SeriesTruncation& tr);

double W_a_lower(double alpha, double y);
double W_b_lower(double alpha, double y);
double W_c_lower(double alpha, double y);
double W_d_upper(double alpha, double y, const SeriesTruncation& tr);
double W_e_upper(double alpha, double y, const SeriesTruncation& tr);

double sigma_a1(double a, const SeriesTruncation& tr);
double sigma_a2(double a, const SeriesTruncation& tr);
// |(a pi - 10)/(a pi - 2)| |(1 + sigma_a1)/(1 + sigma_a2)| without the
// removable singularity at a = 10/pi.
double sigma_ratio(double a, const SeriesTruncation& tr);

// Positivity remainders for the small-X bounds on theta_XY/theta_Y at Y = 0
// and Y = 1/2 (full expressions including leading terms).
double xy_remainder_zero(double X, const SeriesTruncation& tr);
double xy_remainder_half(double X, const SeriesTruncation& tr);
double xy_remainder_zero_lead(double X);
double xy_remainder_half_lead(double X);

// 1 - (1/180) sum_{n>=3 or m>=3} n^2 m^2 |n^4-m^4| |n^2-1| e^{-pi(n^2+m^2-5)X}
double xxy_monotone_remainder(double X, const SeriesTruncation& tr);

}  // namespace lattice::detail
