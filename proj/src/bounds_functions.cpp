#include "bounds_functions.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>
#include <string>

#include "lattice/errors.hpp"

namespace lattice::detail {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
constexpr double kPi3 = kPi2 * kPi;

// sum_{n >= n0} term(n); stops once terms are decreasing and negligible.
template <class F>
double series_from(int n0, F&& term, const SeriesTruncation& tr) {
    double sum = 0.0, abs_sum = 0.0, prev = INFINITY;
    for (int n = n0; n < n0 + tr.max_terms; ++n) {
        const double t = term(static_cast<double>(n));
        sum += t;
        const double a = std::fabs(t);
        abs_sum += a;
        if (a <= prev && a <= tr.abs_tolerance * 1e-3 * std::max(abs_sum, DBL_MIN)) return sum;
        prev = a;
    }
    throw LatticeError(Errc::TruncationNotReached, "auxiliary series did not converge");
}

double pw(double v, int p) {
    double r = 1.0;
    for (int i = 0; i < p; ++i) r *= v;
    return r;
}

double ratio_nu_mu(double X, const SeriesTruncation& tr) {
    return (1.0 + aux_series(AuxSeries::Nu, X, tr)) / (1.0 + aux_series(AuxSeries::Mu, X, tr));
}

double ratio_omegahat_muhat(double X, const SeriesTruncation& tr) {
    return (1.0 + aux_series(AuxSeries::OmegaHat, X, tr)) / (1.0 + aux_series(AuxSeries::MuHat, X, tr));
}

double D12(double alpha, double y, double X, const SeriesTruncation& tr) {
    return phi_head(alpha, y) - (3.0 * alpha * y + 2.0 * kPi * alpha * alpha * y * y) * ratio_nu_mu(X, tr) +
           kPi * y * y * ratio_omegahat_muhat(X, tr);
}

}  // namespace

EpsBar eps_bar(double t, const SeriesTruncation& tr) {
    EpsBar e;
    e.e0 = 2.0 * series_from(1, [&](double n) { return (std::fmod(n, 2.0) == 1.0 ? 1.0 : -1.0) * std::exp(-kPi * n * n * t); }, tr);
    auto w = [&](double n) { return std::exp(-kPi * (n * n - 1.0) * t); };
    auto sgn = [](double n) { return std::fmod(n, 2.0) == 0.0 ? 1.0 : -1.0; };
    e.e1 = series_from(2, [&](double n) { return sgn(n) * n * n * w(n); }, tr);
    e.e2 = series_from(2, [&](double n) { return n * n * w(n); }, tr);
    e.e3 = series_from(2, [&](double n) { return pw(n, 6) * w(n); }, tr);
    e.e4 = series_from(2, [&](double n) { return sgn(n) * pw(n, 6) * w(n); }, tr);
    return e;
}

EpsBar eps_bar_frozen(const SeriesTruncation& tr) {
    // The sums decrease in t, so their values at t = 4/5 bound them on
    // t >= 4/5; eps_0 takes its one-term bound and eps_3 a rounded-up value.
    EpsBar e = eps_bar(0.8, tr);
    e.e0 = 2.0 * std::exp(-0.8 * kPi);
    e.e3 = 0.03402;
    return e;
}

double phi_head(double alpha, double y) {
    const double a2 = alpha * alpha;
    return kPi * a2 * a2 * y * y + a2 * alpha * y + 3.0 * a2 / (4.0 * kPi);
}

double D1(double alpha, double y, const SeriesTruncation& tr) { return D12(alpha, y, 0.5, tr); }

double D2(double alpha, double y, const SeriesTruncation& tr) { return D12(alpha, y, 1.0 / 3.0, tr); }

double D3(double alpha, double y, const SeriesTruncation& tr) {
    const double X = y / alpha;
    const double Y = std::sqrt(std::max(0.0, 1.0 - y * y));
    return phi_head(alpha, y) +
           (3.0 * alpha * y / kPi + 2.0 * alpha * alpha * y * y) * theta_quotient(Quotient::XYoverY, X, Y, tr) +
           (y * y / kPi) * theta_quotient_limit(Quotient::XXYoverY, X, QuotientEnd::Half, tr);
}

double D4(double alpha, double y, const SeriesTruncation&) {
    const double e = std::exp(-kPi * alpha / y);
    const double q = (3.0 * y * y / (4.0 * alpha * alpha) + 2.0 * kPi2 * e) /
                     (pw(y, 3) / (2.0 * pw(alpha, 3)) - 2.0 * kPi * y * y / (alpha * alpha) * e);
    const double r = alpha / y;
    return phi_head(alpha, y) - (3.0 * alpha * y / kPi + 2.0 * alpha * alpha * y * y) * q +
           (15.0 / (4.0 * kPi)) * alpha * alpha * (1.0 - kPi * r / 3.0 - kPi2 * r * r / 60.0);
}

double E_envelope(int i, double alpha, double y, const SeriesTruncation& tr) {
    const double mu = aux_series(AuxSeries::Mu, 0.5, tr);
    const double a2 = alpha * alpha;
    auto w = [&](double n) { return std::exp(-alpha * kPi * y * (n * n - 1.0)); };
    switch (i) {
        case 0:
            return (1.0 + mu) / (1.0 - mu) * series_from(2, [&](double n) {
                       return (kPi * a2 * a2 * y * y * pw(n, 6) + a2 * alpha * y * pw(n, 4) + 3.0 * a2 * n * n / (4.0 * kPi)) * w(n);
                   }, tr);
        case 1:
            return (1.0 + aux_series(AuxSeries::Nu, 0.5, tr)) / (1.0 - mu) * series_from(2, [&](double n) {
                       return (3.0 * alpha * y * n * n + 2.0 * kPi * a2 * y * y * pw(n, 4)) * w(n);
                   }, tr);
        case 2:
            return (1.0 + aux_series(AuxSeries::Omega, 0.5, tr)) / (1.0 - mu) *
                   series_from(2, [&](double n) { return kPi * y * y * n * n * w(n); }, tr);
        default: throw LatticeError(Errc::InvalidArgument, "envelope index must be 0..2");
    }
}

double Et_envelope(int i, double alpha, double y, const SeriesTruncation& tr) {
    const double a2 = alpha * alpha;
    auto w = [&](double n) { return std::exp(-alpha * kPi * (y * (n * n - 1.0) - 1.0 / (4.0 * y))); };
    switch (i) {
        case 0:
            return series_from(2, [&](double n) {
                return (a2 * a2 * y * y * pw(n, 6) + a2 * alpha * y * pw(n, 4) / kPi + 3.0 * a2 * n * n / (4.0 * kPi2)) * w(n);
            }, tr);
        case 1:
            return series_from(2, [&](double n) {
                return (9.0 * a2 * n * n / (2.0 * kPi2) + 3.0 * a2 * alpha * y * pw(n, 4) / kPi) *
                       (1.0 + kPi * alpha / (6.0 * y)) * w(n);
            }, tr);
        case 2:
            return series_from(2, [&](double n) {
                return (15.0 * a2 * n * n / (4.0 * kPi2)) *
                       (1.0 + kPi * alpha / (3.0 * y) + kPi2 * a2 / (60.0 * y * y)) * w(n);
            }, tr);
        default: throw LatticeError(Errc::InvalidArgument, "envelope index must be 0..2");
    }
}

double P_fn(double alpha, double y, const SeriesTruncation& tr) {
    const double t = y / alpha;
    const EpsBar e = eps_bar(t, tr);
    const double ay = alpha * y;
    return 1.0 +
           2.0 * std::exp(-kPi * t) *
               (1.0 + (44.0 / 3.0) * kPi2 * t * t - 14.0 * kPi * t * (1.0 + e.e2) -
                (8.0 / 3.0) * kPi3 * pw(t, 3) * (1.0 + e.e3)) +
           (8.0 / 3.0) * std::exp(-kPi * y * (alpha + 1.0 / alpha)) *
               (4.0 * kPi3 * pw(t, 3) * (1.0 - e.e4) + 12.0 * kPi2 * y * y + 21.0 * kPi * t * (1.0 - e.e1) -
                4.0 * kPi3 * alpha * pw(y, 3) - 4.0 * kPi3 * pw(y, 3) / alpha - 22.0 * kPi2 * t * t) +
           (8.0 / 3.0) * std::exp(-kPi * ay) *
               ((3.0 * kPi2 * ay * ay + 1.5 * kPi * ay + 0.75) * (1.0 - e.e0) - 2.0 * kPi3 * pw(ay, 3));
}

std::array<double, 4> I_a_lower_parts(double alpha, double y, const SeriesTruncation& tr) {
    const double t = y / alpha;
    const EpsBar e = eps_bar(t, tr);
    const double a2 = alpha * alpha;
    const double et = std::exp(-kPi * t);
    const double eay = std::exp(-kPi * alpha * y);
    const double emix = std::exp(-kPi * y * (alpha + 1.0 / alpha));
    return {
        0.375 * a2 + 0.75 * a2 * et +
            ((3.0 * kPi2 * a2 * a2 * y * y + 1.5 * kPi * a2 * alpha * y + 0.75 * a2) * (1.0 - e.e0) -
             2.0 * kPi3 * pw(alpha, 5) * pw(y, 3)) * eay,
        -10.5 * kPi * alpha * y * et * (1.0 + e.e2) +
            ((12.0 * kPi2 * a2 * y * y + 21.0 * kPi * alpha * y) * (1.0 - e.e1) - 4.0 * kPi3 * pw(alpha * y, 3)) * emix,
        11.0 * kPi2 * y * y * et - (4.0 * kPi3 * alpha * pw(y, 3) + 22.0 * kPi2 * y * y) * emix,
        -2.0 * kPi3 * pw(y, 3) / alpha * et * (1.0 + e.e3) + 4.0 * kPi3 * pw(y, 3) / alpha * emix * (1.0 - e.e4),
    };
}

double h_fn(double r, double t, const EpsBar& e) {
    const double r2 = r * r;
    return (8.0 / 3.0) * std::exp(-kPi * t * (r2 + 1.0)) *
               (4.0 * kPi3 * pw(t, 3) * (1.0 - e.e4) + 12.0 * kPi2 * r2 * t * t + 21.0 * kPi * t * (1.0 - e.e1) -
                4.0 * kPi3 * r2 * r2 * pw(t, 3) - 4.0 * kPi3 * r2 * pw(t, 3) - 22.0 * kPi2 * t * t) +
           (8.0 / 3.0) * std::exp(-kPi * t * r2) *
               ((3.0 * kPi2 * r2 * r2 * t * t + 1.5 * r2 * t + 0.75) * (1.0 - e.e0) - 2.0 * kPi3 * pw(r2, 3) * pw(t, 3));
}

double g_fn(double t, const SeriesTruncation& tr) {
    const EpsBar e = eps_bar_frozen(tr);
    return 1.0 +
           2.0 * std::exp(-kPi * t) *
               (1.0 + (44.0 / 3.0) * kPi2 * t * t - 14.0 * kPi * t * (1.0 + e.e2) -
                (8.0 / 3.0) * kPi3 * pw(t, 3) * (1.0 + e.e3)) +
           h_fn(1.5, t, e);
}

double J1_envelope(double alpha, double y, const SeriesTruncation& tr) {
    const double ay = alpha * y;
    const double tail = series_from(3, [&](double n) { return pw(n, 6) / 64.0 * std::exp(-kPi * ay * (n * n - 4.0)); }, tr);
    return 128.0 * kPi3 * pw(ay, 3) * std::exp(-4.0 * kPi * ay) * theta1({0, 0}, y / alpha, 1.0, tr) * (1.0 + tail);
}

double J2_envelope(double r, double t, const SeriesTruncation& tr) {
    const double r2t = r * r * t;
    const double tail = series_from(3, [&](double n) { return pw(n, 4) / 16.0 * std::exp(-kPi * r2t * (n * n - 4.0)); }, tr);
    return 32.0 * kPi2 * pw(r, 4) * pw(t, 3) * std::exp(-4.0 * kPi * r2t) * -theta1({1, 0}, t, 1.0, tr) * (1.0 + tail);
}

namespace {

// 1 + sum_{n>=2} f(n) exp(-rate * g(n))
template <class P, class G>
double one_plus(P&& poly, G&& expo, double rate, const SeriesTruncation& tr) {
    return 1.0 + series_from(2, [&](double n) { return poly(n) * std::exp(-rate * expo(n)); }, tr);
}

double sq_minus_one(double n) { return n * n - 1.0; }
double pronic(double n) { return (n - 1.0) * n; }

std::array<double, 3> eps_b_parts(double alpha, double y, const SeriesTruncation& tr) {
    const double b1 = series_from(2, [&](double n) { return pw(2.0 * n - 1.0, 6) * std::exp(-4.0 * kPi * alpha * y * pronic(n)); }, tr);
    const double b2 = series_from(2, [&](double n) { return std::exp(-kPi * alpha * pronic(n) / y); }, tr);
    return {b1, b2, b1 * b2};
}

}  // namespace

double eps_a(double alpha, double y, const SeriesTruncation& tr) {
    const double a1 = 2.0 * series_from(1, [&](double n) { return std::exp(-4.0 * kPi * alpha * y * n * n); }, tr);
    const double a2 = series_from(2, [&](double n) { return pw(n, 6) * std::exp(-kPi * alpha * sq_minus_one(n) / y); }, tr);
    const double a4 = 64.0 * pw(y, 6) * std::exp(-kPi * alpha * (4.0 * y - 1.0 / y)) *
                      one_plus([](double n) { return pw(n, 6); }, sq_minus_one, 4.0 * kPi * alpha * y, tr) *
                      classical_theta(3, alpha / y, 0, tr);
    return a1 + a2 + a1 * a2 + a4;
}

double eps_b(double alpha, double y, const SeriesTruncation& tr) {
    const auto b = eps_b_parts(alpha, y, tr);
    const double b4 = 1.0 / (64.0 * pw(y, 6)) *
                      one_plus([](double) { return 1.0; }, pronic, 4.0 * kPi * alpha * y, tr) *
                      one_plus([](double n) { return pw(2.0 * n - 1.0, 6); }, pronic, kPi * alpha / y, tr);
    return b[0] + b[1] + b[2] + b4;
}

double eps_c(double alpha, double y, const SeriesTruncation& tr) {
    const auto b = eps_b_parts(alpha, y, tr);
    const double big = 4.0 * kPi * alpha * y;
    const double small = kPi * alpha / y;
    const double far = std::exp(-3.0 * kPi * alpha * (y + 1.0 / (4.0 * y)));
    const double c1 = 32.0 * std::exp(-kPi * alpha * (3.0 * y - 1.0 / (4.0 * y))) *
                      one_plus([](double n) { return pw(n, 6); }, sq_minus_one, big, tr) *
                      classical_theta(3, alpha / y, 0, tr);
    const double c2 = 4.0 / pw(y, 4) * far * one_plus([](double n) { return n * n; }, sq_minus_one, big, tr) *
                      one_plus([](double m) { return pw(m, 4); }, sq_minus_one, small, tr);
    const double c3 = 1.0 / (16.0 * pw(y, 4)) * one_plus([](double n) { return pw(2.0 * n - 1.0, 2); }, pronic, big, tr) *
                      one_plus([](double m) { return pw(2.0 * m - 1.0, 4); }, pronic, small, tr);
    const double c4 = 32.0 / (y * y) * far * one_plus([](double n) { return pw(n, 4); }, sq_minus_one, big, tr) *
                      one_plus([](double m) { return m * m; }, sq_minus_one, small, tr);
    const double c5 = 1.0 / (2.0 * y * y) * one_plus([](double n) { return pw(2.0 * n - 1.0, 4); }, pronic, big, tr) *
                      one_plus([](double m) { return pw(2.0 * m - 1.0, 2); }, pronic, small, tr);
    return b[0] + b[1] + b[2] + c1 + c2 + c3 + c4 + c5;
}

double Y_fn(double alpha, double y, const SeriesTruncation& tr) {
    const double pa = kPi * alpha;
    const double y2 = y * y;
    const double inner = kPi2 * alpha * alpha * y2 * pw(1.0 - 1.0 / (16.0 * y2 * y2), 2) +
                         2.0 * pw(1.0 - 1.0 / (4.0 * y2), 2) + 4.0 + pa / y + 1.0 / y2 + pa / (4.0 * y2 * y) -
                         4.0 * pa * y * (1.0 + eps_b(alpha, y, tr)) - 2.0 * pa * y * (1.0 + eps_c(alpha, y, tr));
    return 1.0 + pa * pa / (2.0 * y2) - (2.0 * pa / y) * (1.0 + eps_a(alpha, y, tr)) +
           y2 * y2 * std::exp(-pa * (y - 3.0 / (4.0 * y))) * inner;
}

namespace {

double near_shell(double alpha, double y) { return std::exp(-kPi * alpha * (y + 1.0 / (4.0 * y))); }

}  // namespace

double W_a_lower(double alpha, double y) {
    return 2.0 / pw(y, 6) * std::exp(-kPi * alpha / y) +
           4.0 * y * y * pw(1.0 - 1.0 / (16.0 * pw(y, 4)), 2) * near_shell(alpha, y);
}

double W_b_lower(double alpha, double y) {
    return 2.0 / pw(y, 4) * std::exp(-kPi * alpha / y) + 4.0 * pw(1.0 - 1.0 / (4.0 * y * y), 2) * near_shell(alpha, y);
}

double W_c_lower(double alpha, double y) { return (4.0 * y + 1.0 / y) * near_shell(alpha, y); }

double W_d_upper(double alpha, double y, const SeriesTruncation& tr) {
    return 2.0 / pw(y, 5) * std::exp(-kPi * alpha / y) * (1.0 + eps_a(alpha, y, tr)) +
           4.0 * y * near_shell(alpha, y) *
               (1.0 - 1.0 / (4.0 * y * y) - 1.0 / (16.0 * pw(y, 4)) + eps_b(alpha, y, tr));
}

double W_e_upper(double alpha, double y, const SeriesTruncation& tr) {
    return 4.0 * y * y * near_shell(alpha, y) * (1.0 + eps_c(alpha, y, tr));
}

namespace {

double sigma_sum1(double a, const SeriesTruncation& tr) {
    return series_from(2, [&](double n) {
        const double u = n - 0.5;
        return (2.0 * a * kPi * pw(u, 6) - 5.0 * pw(u, 4)) * std::exp(-a * kPi * (n * n - n));
    }, tr);
}

double sigma_sum2(double a, const SeriesTruncation& tr) {
    return series_from(2, [&](double n) {
        const double u = n - 0.5;
        return (2.0 * a * kPi * u * u - 1.0) * std::exp(-a * kPi * (n * n - n));
    }, tr);
}

}  // namespace

double sigma_a1(double a, const SeriesTruncation& tr) { return sigma_sum1(a, tr) / (a * kPi / 32.0 - 5.0 / 16.0); }

double sigma_a2(double a, const SeriesTruncation& tr) { return sigma_sum2(a, tr) / (a * kPi / 2.0 - 1.0); }

double sigma_ratio(double a, const SeriesTruncation& tr) {
    return std::fabs(a * kPi - 10.0 + 32.0 * sigma_sum1(a, tr)) / std::fabs(a * kPi - 2.0 + 2.0 * sigma_sum2(a, tr));
}

double xy_remainder_zero_lead(double X) { return 3.0 * kPi * pw(X, 4) * std::exp(-kPi / X); }

double xy_remainder_zero(double X, const SeriesTruncation& tr) {
    const double X2 = X * X, X3 = X2 * X, X4 = X3 * X;
    const double T = series_from(2, [&](double n) {
        const double n2 = n * n;
        return (3.0 * kPi * X4 + 2.0 * kPi2 * X3 + 4.0 * kPi3 * X2 * n2 * n2 - 4.0 * kPi3 * X2 * n2 - 12.0 * kPi2 * X3 * n2) *
                   std::exp(-kPi * (n2 + 1.0) / X) +
               (1.5 * kPi * X4 * n2 - kPi2 * X3 * n2 * n2) * std::exp(-kPi * n2 / X);
    }, tr);
    return xy_remainder_zero_lead(X) + (3.0 * kPi * X4 - 10.0 * kPi2 * X3) * std::exp(-2.0 * kPi / X) + T;
}

double xy_remainder_half_lead(double X) { return (5.0 * kPi * pw(X, 3) - 6.0 * pw(X, 4)) * std::exp(-kPi / (4.0 * X)); }

double xy_remainder_half(double X, const SeriesTruncation& tr) {
    const double X2 = X * X, X3 = X2 * X, X4 = X3 * X;
    const double tail = series_from(2, [&](double n) {
        const double u2 = (n - 0.5) * (n - 0.5);
        const double d = (2.0 * kPi2 * X2 + 24.0 * kPi * X3) * u2 - 8.0 * kPi2 * X2 * u2 * u2 - kPi * X3 - 6.0 * X4;
        return d * std::exp(-kPi * u2 / X);
    }, tr);
    return xy_remainder_half_lead(X) + tail;
}

double xxy_monotone_remainder(double X, const SeriesTruncation& tr) {
    auto term = [&](double n, double m) {
        return n * n * m * m * std::fabs(pw(n, 4) - pw(m, 4)) * std::fabs(n * n - 1.0) *
               std::exp(-kPi * (n * n + m * m - 5.0) * X);
    };
    // Row n = 1 vanishes; each later row is summed over the admissible m.
    const double s = series_from(2, [&](double n) {
        const int m0 = n >= 3 ? 1 : 3;
        return series_from(m0, [&](double m) { return term(n, m); }, tr);
    }, tr);
    return 1.0 - s / 180.0;
}

}  // namespace lattice::detail
