#pragma once

namespace lattice {

struct SeriesTruncation {
    double abs_tolerance = 1e-14;
    int max_terms = 64;
};

void validate(const SeriesTruncation& t);

// Number of X and Y derivatives. Supported pairs:
// (0,0) (1,0) (2,0) (3,0) (0,1) (1,1) (2,1).
struct ThetaOrder {
    int dx = 0;
    int dy = 0;
};

constexpr double kThetaSwitchX = 1.0;

// d^dx/dX^dx d^dy/dY^dy of theta(X;Y) = sum_n exp(-pi n^2 X) exp(2 pi i n Y).
// Uses the Fourier series for X >= kThetaSwitchX, the Gaussian comb otherwise.
double theta1(ThetaOrder order, double X, double Y, const SeriesTruncation& trunc = {});

// The two representations, exposed for cross-checks.
double theta1_fourier(ThetaOrder order, double X, double Y, const SeriesTruncation& trunc = {});
double theta1_poisson(ThetaOrder order, double X, double Y, const SeriesTruncation& trunc = {});

// Jacobi triple product form of theta(X;Y).
double theta1_product(double X, double Y, const SeriesTruncation& trunc = {});

// theta_2, theta_3, theta_4 at nome exp(-pi X), with `order` X-derivatives (0..2).
double classical_theta(int kind, double X, int order, const SeriesTruncation& trunc = {});

enum class AuxSeries { Mu, MuHat, Nu, NuHat, Omega, OmegaHat };

// sum_{n>=2} n^p exp(-pi (n^2-1) X), p = 2, 4, 6; hatted variants carry (-1)^(n+1).
double aux_series(AuxSeries name, double X, const SeriesTruncation& trunc = {});

enum class Quotient { XYoverY, XXYoverY };
enum class QuotientEnd { Zero, Half };

// Limit of theta_XY/theta_Y or theta_XXY/theta_Y as Y -> 0 or Y -> 1/2.
// Uses the tail-series closed forms for X >= kQuotientSeriesX, the
// Gaussian-comb forms below.
constexpr double kQuotientSeriesX = 0.2;
double theta_quotient_limit(Quotient q, double X, QuotientEnd end, const SeriesTruncation& trunc = {});
double theta_quotient_limit_series(Quotient q, double X, QuotientEnd end,
                                   const SeriesTruncation& trunc = {});
double theta_quotient_limit_comb(Quotient q, double X, QuotientEnd end,
                                 const SeriesTruncation& trunc = {});

// theta_XY/theta_Y or theta_XXY/theta_Y at any Y; switches to the limit forms
// within kQuotientLimitBand of a half-integer.
constexpr double kQuotientLimitBand = 1e-6;
double theta_quotient(Quotient q, double X, double Y, const SeriesTruncation& trunc = {});

// sum_n (n-Y)^p exp(-pi (n-Y)^2 / X) divided by the p = 1 sum, for p = 3, 5.
// Limits at half-integers are taken analytically.
double comb_moment_ratio(int p, double X, double Y, const SeriesTruncation& trunc = {});

// theta_{X^dx Y}(X; kY) / theta_Y(X; Y) for dx = 0, 1, 2 and k >= 1, evaluated
// without cancellation near the zeros of theta_Y (sin-ratio Chebyshev form on
// the Fourier side, offset-divided pairs on the comb side).
double theta_y_ratio(int dx, int k, double X, double Y, const SeriesTruncation& trunc = {});

}  // namespace lattice
