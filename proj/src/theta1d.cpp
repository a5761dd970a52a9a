#include "lattice/theta1d.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lattice/errors.hpp"

namespace lattice {

namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_x(double X) {
    if (!(X > 0) || !std::isfinite(X)) {
        throw LatticeError(Errc::NonPositiveX, "X must be positive, got " + std::to_string(X));
    }
}

void require_order(ThetaOrder o) {
    const bool ok = (o.dy == 0 && o.dx >= 0 && o.dx <= 3) || (o.dy == 1 && o.dx >= 0 && o.dx <= 2);
    if (!ok) {
        throw LatticeError(Errc::InvalidArgument, "unsupported derivative order (" +
                                                      std::to_string(o.dx) + "," +
                                                      std::to_string(o.dy) + ")");
    }
}

[[noreturn]] void not_reached(const char* what, double X) {
    throw LatticeError(Errc::TruncationNotReached,
                       std::string(what) + " did not converge at X=" + std::to_string(X));
}

// Series stop rule: the newest block is past its polynomial hump and below
// tolerance relative to max(1, running absolute sum).
bool small_enough(double bound, double abs_sum, const SeriesTruncation& t) {
    return bound <= t.abs_tolerance * std::max(1.0, abs_sum);
}

double reduce_unit(double Y) { return Y - std::round(Y); }

// Poisson-side prefactor of X^{-1/2} exp(-pi u^2/X) for each derivative order,
// with u = n - Y.
double comb_prefactor(ThetaOrder o, double u, double X) {
    const double u2 = u * u;
    const double p = kPi;
    switch (o.dy * 4 + o.dx) {
        case 0: return 1.0;
        case 1: return -0.5 / X + p * u2 / (X * X);
        case 2: return 0.75 / (X * X) - 3.0 * p * u2 / (X * X * X) + p * p * u2 * u2 / std::pow(X, 4);
        case 3:
            return -15.0 / (8.0 * X * X * X) + 45.0 * p * u2 / (4.0 * std::pow(X, 4)) -
                   7.5 * p * p * u2 * u2 / std::pow(X, 5) + p * p * p * u2 * u2 * u2 / std::pow(X, 6);
        case 4: return 2.0 * p * u / X;
        case 5: return -3.0 * p * u / (X * X) + 2.0 * p * p * u * u2 / (X * X * X);
        case 6:
            return 7.5 * p * u / (X * X * X) - 10.0 * p * p * u * u2 / std::pow(X, 4) +
                   2.0 * p * p * p * u * u2 * u2 / std::pow(X, 5);
    }
    return 0.0;
}

// sum over m in (Z + c) of (m)^p exp(-pi m^2/X), c in {0, 1/2}, p even.
double even_comb_moment(int p, double X, double c, const SeriesTruncation& t) {
    double sum = 0.0, abs_sum = 0.0;
    for (int j = 0; j < t.max_terms; ++j) {
        const double m = j + c;
        double block = 0.0;
        if (m == 0.0) {
            block = p == 0 ? 1.0 : 0.0;
        } else {
            block = 2.0 * std::pow(m, p) * std::exp(-kPi * m * m / X);
        }
        sum += block;
        abs_sum += std::fabs(block);
        if (m > 0 && kPi * m * m / X >= p / 2.0 + 1.0 && small_enough(std::fabs(block), abs_sum, t)) {
            return sum;
        }
    }
    not_reached("comb moment", X);
}

// Odd comb moments sum_n u^p exp(-pi u^2/X), u = n - Y, p = 1, 3, 5, divided
// by the offset t of Y from the nearest zero c in Z/2, so that nothing cancels
// as t -> 0. At t = 0 the values are the analytic limits.
struct OddMoments {
    double t = 0.0;
    std::array<double, 3> s{};  // p = 1, 3, 5
};

double binom(int n, int k) {
    double r = 1.0;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

OddMoments odd_moments_at(double X, double c, double t, const SeriesTruncation& tr) {
    OddMoments out;
    out.t = t;
    std::array<double, 3> abs_sum{};
    const int powers[3] = {1, 3, 5};
    const bool integer_centre = (c == 0.0);
    if (integer_centre) {
        // m = 0: u = -t, (-t)^p / t = -t^{p-1}
        const double e0 = std::exp(-kPi * t * t / X);
        for (int i = 0; i < 3; ++i) {
            out.s[i] = -std::pow(t, powers[i] - 1) * e0;
            abs_sum[i] = std::fabs(out.s[i]);
        }
    }
    for (int j = 0; j < tr.max_terms; ++j) {
        const double m = integer_centre ? j + 1.0 : j + 0.5;
        const double e1 = std::exp(-kPi * (m - t) * (m - t) / X);
        const double e2 = std::exp(-kPi * (m + t) * (m + t) / X);
        const double a = 4.0 * kPi * m * t / X;
        double diff_over_t;  // (e1 - e2) / t
        if (t == 0.0) {
            diff_over_t = e2 * 4.0 * kPi * m / X;
        } else if (std::fabs(a) < 1.0) {
            diff_over_t = e2 * std::expm1(a) / t;
        } else {
            diff_over_t = (e1 - e2) / t;
        }
        bool done = kPi * (m - 0.5) * (m - 0.5) / X >= 4.0;
        for (int i = 0; i < 3; ++i) {
            const int p = powers[i];
            double pair = std::pow(m, p) * diff_over_t;
            for (int k = 1; k <= p; ++k) {
                const double w = binom(p, k) * std::pow(m, p - k) * std::pow(t, k - 1);
                pair += (k % 2 == 1) ? -w * (e1 + e2) : w * (e1 - e2);
            }
            out.s[i] += pair;
            abs_sum[i] += std::fabs(pair);
            done = done && small_enough(std::fabs(pair), abs_sum[i], tr);
        }
        if (done) return out;
    }
    not_reached("odd comb moments", X);
}

OddMoments odd_moments(double X, double Y, const SeriesTruncation& tr) {
    const double yr = reduce_unit(Y);
    if (std::fabs(yr) <= 0.25) return odd_moments_at(X, 0.0, yr, tr);
    const double c = yr > 0 ? 0.5 : -0.5;
    return odd_moments_at(X, 0.5, yr - c, tr);
}

// theta_{X^dx Y} / t on the comb side, from offset-divided moments.
double comb_y_family(int dx, double X, const OddMoments& m) {
    const double p = kPi;
    const double s1 = m.s[0], s3 = m.s[1], s5 = m.s[2];
    double v = 0.0;
    switch (dx) {
        case 0: v = 2.0 * p / X * s1; break;
        case 1: v = -3.0 * p / (X * X) * s1 + 2.0 * p * p / (X * X * X) * s3; break;
        case 2:
            v = 7.5 * p / (X * X * X) * s1 - 10.0 * p * p / std::pow(X, 4) * s3 +
                2.0 * p * p * p / std::pow(X, 5) * s5;
            break;
    }
    return v / std::sqrt(X);
}

// sum_{n>=1} n^p exp(-pi n^2 X) U_{nk-1}(cos 2 pi Y) for p = 1, 3, 5, where
// U is the Chebyshev polynomial of the second kind: sin(2 pi n k Y) / sin(2 pi Y).
std::array<double, 3> fourier_sin_ratio(double X, double Y, int k, const SeriesTruncation& tr) {
    const double c = std::cos(2.0 * kPi * reduce_unit(Y));
    std::array<double, 3> sum{}, abs_sum{};
    double u_prev = 0.0, u_cur = 1.0;  // U_{-1}, U_0
    int index = 0;                      // index of u_cur
    for (int n = 1; n <= tr.max_terms; ++n) {
        const int target = n * k - 1;
        while (index < target) {
            const double next = 2.0 * c * u_cur - u_prev;
            u_prev = u_cur;
            u_cur = next;
            ++index;
        }
        const double e = std::exp(-kPi * n * n * X);
        bool done = kPi * n * n * X >= 3.5;
        for (int i = 0; i < 3; ++i) {
            const double w = std::pow(n, 2 * i + 1) * e;
            sum[i] += w * u_cur;
            abs_sum[i] += std::fabs(w * u_cur);
            done = done && small_enough(w * n * k, abs_sum[i], tr);
        }
        if (done) return sum;
    }
    not_reached("sin-ratio series", X);
}

}  // namespace

void validate(const SeriesTruncation& t) {
    if (!(t.abs_tolerance > 0) || t.max_terms < 4) {
        throw LatticeError(Errc::InvalidArgument,
                           "truncation needs abs_tolerance > 0 and max_terms >= 4");
    }
}

double theta1_fourier(ThetaOrder o, double X, double Y, const SeriesTruncation& tr) {
    require_positive_x(X);
    require_order(o);
    validate(tr);
    const double yr = reduce_unit(Y);
    double sum = (o.dx == 0 && o.dy == 0) ? 1.0 : 0.0;
    double abs_sum = std::fabs(sum);
    const double hump = o.dx + 0.5 * o.dy + 1.0;
    for (int n = 1; n <= tr.max_terms; ++n) {
        const double n2 = static_cast<double>(n) * n;
        const double g = 2.0 * std::pow(-kPi * n2, o.dx) * std::exp(-kPi * n2 * X);
        double term, bound;
        if (o.dy == 0) {
            term = g * std::cos(2.0 * kPi * n * yr);
            bound = std::fabs(g);
        } else {
            term = -2.0 * kPi * n * g * std::sin(2.0 * kPi * n * yr);
            bound = std::fabs(2.0 * kPi * n * g);
        }
        sum += term;
        abs_sum += std::fabs(term);
        if (kPi * n2 * X >= hump && small_enough(bound, abs_sum, tr)) return sum;
    }
    not_reached("Fourier theta series", X);
}

double theta1_poisson(ThetaOrder o, double X, double Y, const SeriesTruncation& tr) {
    require_positive_x(X);
    require_order(o);
    validate(tr);
    const double yr = reduce_unit(Y);
    const double scale = 1.0 / std::sqrt(X);
    double sum = 0.0, abs_sum = 0.0;
    for (int j = 0; j < tr.max_terms; ++j) {
        double block = 0.0, bound = 0.0;
        const int signs = j == 0 ? 1 : 2;
        for (int s = 0; s < signs; ++s) {
            const double u = (s == 0 ? j : -j) - yr;
            const double v = comb_prefactor(o, u, X) * std::exp(-kPi * u * u / X);
            block += v;
            bound += std::fabs(v);
        }
        sum += block;
        abs_sum += bound;
        const double m = j - 0.5;
        if (j >= 1 && kPi * m * m / X >= 4.0 && small_enough(bound * scale, abs_sum * scale, tr)) {
            return sum * scale;
        }
    }
    not_reached("Gaussian comb theta series", X);
}

double theta1(ThetaOrder o, double X, double Y, const SeriesTruncation& tr) {
    require_positive_x(X);
    return X >= kThetaSwitchX ? theta1_fourier(o, X, Y, tr) : theta1_poisson(o, X, Y, tr);
}

double theta1_product(double X, double Y, const SeriesTruncation& tr) {
    require_positive_x(X);
    validate(tr);
    const double c = std::cos(2.0 * kPi * reduce_unit(Y));
    double prod = 1.0;
    for (int n = 1; n <= tr.max_terms; ++n) {
        const double q_even = std::exp(-2.0 * kPi * n * X);
        const double q_odd = std::exp(-(2.0 * n - 1.0) * kPi * X);
        prod *= (1.0 - q_even) * (1.0 + q_odd * q_odd + 2.0 * q_odd * c);
        if (q_even + 2.0 * q_odd <= tr.abs_tolerance * 1e-2) return prod;
    }
    not_reached("triple product", X);
}

double classical_theta(int kind, double X, int order, const SeriesTruncation& tr) {
    require_positive_x(X);
    if (order < 0 || order > 2) {
        throw LatticeError(Errc::InvalidArgument, "classical theta order must be 0..2");
    }
    switch (kind) {
        case 3: return theta1({order, 0}, X, 0.0, tr);
        case 4: return theta1({order, 0}, X, 0.5, tr);
        case 2: break;
        default: throw LatticeError(Errc::InvalidArgument, "classical theta kind must be 2, 3 or 4");
    }
    if (X < kThetaSwitchX) {
        // theta_2(X) = X^{-1/2} theta_4(1/X), differentiated by the chain rule.
        const double Xi = 1.0 / X;
        const double g0 = theta1({0, 0}, Xi, 0.5, tr);
        if (order == 0) return std::pow(X, -0.5) * g0;
        const double g1 = theta1({1, 0}, Xi, 0.5, tr);
        if (order == 1) return -0.5 * std::pow(X, -1.5) * g0 - std::pow(X, -2.5) * g1;
        const double g2 = theta1({2, 0}, Xi, 0.5, tr);
        return 0.75 * std::pow(X, -2.5) * g0 + 3.0 * std::pow(X, -3.5) * g1 + std::pow(X, -4.5) * g2;
    }
    validate(tr);
    double sum = 0.0, abs_sum = 0.0;
    for (int n = 1; n <= tr.max_terms; ++n) {
        const double m2 = (n - 0.5) * (n - 0.5);
        const double term = 2.0 * std::pow(-kPi * m2, order) * std::exp(-kPi * m2 * X);
        sum += term;
        abs_sum += std::fabs(term);
        if (kPi * m2 * X >= order + 1.0 && small_enough(std::fabs(term), abs_sum, tr)) return sum;
    }
    not_reached("theta_2 series", X);
}

double aux_series(AuxSeries name, double X, const SeriesTruncation& tr) {
    require_positive_x(X);
    validate(tr);
    int p = 2;
    bool hat = false;
    switch (name) {
        case AuxSeries::Mu: p = 2; break;
        case AuxSeries::MuHat: p = 2; hat = true; break;
        case AuxSeries::Nu: p = 4; break;
        case AuxSeries::NuHat: p = 4; hat = true; break;
        case AuxSeries::Omega: p = 6; break;
        case AuxSeries::OmegaHat: p = 6; hat = true; break;
    }
    double sum = 0.0, abs_sum = 0.0;
    for (int n = 2; n < tr.max_terms + 2; ++n) {
        const double n2 = static_cast<double>(n) * n;
        double term = std::pow(n, p) * std::exp(-kPi * (n2 - 1.0) * X);
        if (hat && n % 2 == 0) term = -term;
        sum += term;
        abs_sum += std::fabs(term);
        if (kPi * (n2 - 1.0) * X >= p / 2.0 + 1.0 && small_enough(std::fabs(term), abs_sum, tr)) {
            return sum;
        }
    }
    not_reached("tail series", X);
}

double theta_quotient_limit_series(Quotient q, double X, QuotientEnd end, const SeriesTruncation& tr) {
    require_positive_x(X);
    const bool half = end == QuotientEnd::Half;
    const double mu = aux_series(half ? AuxSeries::MuHat : AuxSeries::Mu, X, tr);
    if (q == Quotient::XYoverY) {
        const double nu = aux_series(half ? AuxSeries::NuHat : AuxSeries::Nu, X, tr);
        return -kPi * (1.0 + nu) / (1.0 + mu);
    }
    const double om = aux_series(half ? AuxSeries::OmegaHat : AuxSeries::Omega, X, tr);
    return kPi * kPi * (1.0 + om) / (1.0 + mu);
}

double theta_quotient_limit_comb(Quotient q, double X, QuotientEnd end, const SeriesTruncation& tr) {
    require_positive_x(X);
    validate(tr);
    const double c = end == QuotientEnd::Half ? 0.5 : 0.0;
    const double e0 = even_comb_moment(0, X, c, tr);
    const double e2 = even_comb_moment(2, X, c, tr);
    const double e4 = even_comb_moment(4, X, c, tr);
    if (q == Quotient::XYoverY) {
        const double num = 0.75 * X * X * e0 - 3.0 * kPi * X * e2 + kPi * kPi * e4;
        const double den = kPi * X * X * e2 - 0.5 * X * X * X * e0;
        return num / den;
    }
    const double e6 = even_comb_moment(6, X, c, tr);
    const double den = 2.0 * kPi * e2 / X - e0;
    const double f3 = (2.0 * kPi * e4 / X - 3.0 * e2) / den;
    const double f5 = (2.0 * kPi * e6 / X - 5.0 * e4) / den;
    return 15.0 / (4.0 * X * X) - 5.0 * kPi / (X * X * X) * f3 + kPi * kPi / std::pow(X, 4) * f5;
}

double theta_quotient_limit(Quotient q, double X, QuotientEnd end, const SeriesTruncation& tr) {
    require_positive_x(X);
    return X >= kQuotientSeriesX ? theta_quotient_limit_series(q, X, end, tr)
                                 : theta_quotient_limit_comb(q, X, end, tr);
}

double theta_y_ratio(int dx, int k, double X, double Y, const SeriesTruncation& tr) {
    require_positive_x(X);
    validate(tr);
    if (dx < 0 || dx > 2) throw LatticeError(Errc::InvalidArgument, "dx must be 0..2");
    if (k < 1) throw LatticeError(Errc::NonPositiveK, "k must be >= 1");
    if (X >= kThetaSwitchX) {
        const auto num = fourier_sin_ratio(X, Y, k, tr);
        const auto den = k == 1 ? num : fourier_sin_ratio(X, Y, 1, tr);
        return std::pow(-kPi, dx) * num[dx] / den[0];
    }
    const OddMoments base = odd_moments(X, Y, tr);
    const double den = comb_y_family(0, X, base);
    if (k == 1) return comb_y_family(dx, X, base) / den;
    if (std::fabs(k * base.t) <= 0.25) {
        // kY sits next to the zero k*c; its offset is exactly k*t.
        const double yr = reduce_unit(Y);
        const double centre = yr - base.t;
        const double ck = std::fabs(reduce_unit(k * centre)) > 0.25 ? 0.5 : 0.0;
        const OddMoments scaled = odd_moments_at(X, ck, k * base.t, tr);
        return k * comb_y_family(dx, X, scaled) / den;
    }
    const OddMoments scaled = odd_moments(X, k * Y, tr);
    return comb_y_family(dx, X, scaled) * scaled.t / (den * base.t);
}

double theta_quotient(Quotient q, double X, double Y, const SeriesTruncation& tr) {
    require_positive_x(X);
    const double yr = reduce_unit(Y);
    if (std::fabs(yr) < kQuotientLimitBand) return theta_quotient_limit(q, X, QuotientEnd::Zero, tr);
    if (0.5 - std::fabs(yr) < kQuotientLimitBand) {
        return theta_quotient_limit(q, X, QuotientEnd::Half, tr);
    }
    return theta_y_ratio(q == Quotient::XYoverY ? 1 : 2, 1, X, Y, tr);
}

double comb_moment_ratio(int p, double X, double Y, const SeriesTruncation& tr) {
    require_positive_x(X);
    validate(tr);
    if (p != 3 && p != 5) throw LatticeError(Errc::InvalidArgument, "moment power must be 3 or 5");
    const OddMoments m = odd_moments(X, Y, tr);
    return m.s[p / 2] / m.s[0];
}

}  // namespace lattice
