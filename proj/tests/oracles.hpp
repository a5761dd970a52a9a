#pragma once
// Brute-force reference values computed independently of the library:
// plain truncated sums in long double with generous fixed cutoffs.

#include <cmath>
#include <complex>
#include <functional>
#include <random>

namespace oracle {

constexpr long double kPi = 3.141592653589793238462643383279502884L;

// d^dx/dX^dx d^dy/dY^dy sum_n exp(-pi n^2 X + 2 pi i n Y)
inline double theta1(int dx, int dy, double X, double Y) {
    const int N = static_cast<int>(std::ceil(std::sqrt(60.0 / X))) + 4;
    std::complex<long double> s = 0;
    for (int n = -N; n <= N; ++n) {
        const long double n2 = static_cast<long double>(n) * n;
        std::complex<long double> w = std::pow(-kPi * n2, dx) * std::exp(-kPi * n2 * X);
        for (int j = 0; j < dy; ++j) w *= std::complex<long double>(0, 2 * kPi * n);
        s += w * std::polar(1.0L, 2 * kPi * n * static_cast<long double>(Y));
    }
    return static_cast<double>(s.real());
}

// sum over (m, n) != (0, 0) of f(Q), Q = |m z + n|^2 / y, for all Q <= q_max.
inline long double lattice_sum(double x, double y, double q_max, const std::function<long double(long double)>& f) {
    long double s = 0;
    const long mmax = static_cast<long>(std::floor(std::sqrt(q_max / y))) + 1;
    for (long m = -mmax; m <= mmax; ++m) {
        const long double c = -static_cast<long double>(m) * x;
        const long double w = std::sqrt(std::max(0.0L, q_max * y - static_cast<long double>(m) * m * y * y));
        for (long n = static_cast<long>(std::floor(c - w)) - 1; n <= static_cast<long>(std::ceil(c + w)) + 1; ++n) {
            if (m == 0 && n == 0) continue;
            const long double u = m * static_cast<long double>(x) + n;
            const long double Q = (u * u + static_cast<long double>(m) * m * y * y) / y;
            if (Q <= q_max) s += f(Q);
        }
    }
    return s;
}

inline double qmax_for(double alpha) { return 80.0 / (kPi * alpha) + 10.0; }

inline double theta2(double alpha, double x, double y) {
    return static_cast<double>(
        1.0L + lattice_sum(x, y, qmax_for(alpha), [&](long double Q) { return std::exp(-kPi * alpha * Q); }));
}

inline double energy_pow(int k, double alpha, double x, double y) {
    return static_cast<double>(
        lattice_sum(x, y, qmax_for(alpha), [&](long double Q) { return std::pow(Q, k) * std::exp(-kPi * alpha * Q); }));
}

inline double energy_R(double alpha, double x, double y) { return energy_pow(2, alpha, x, y); }

// sum Q (e^{-pi alpha Q} - e^{-pi beta Q})
inline double energy_corollary(double alpha, double beta, double x, double y) {
    return static_cast<double>(lattice_sum(x, y, qmax_for(alpha), [&](long double Q) {
        return Q * (std::exp(-kPi * alpha * Q) - std::exp(-kPi * beta * Q));
    }));
}

// Composite Simpson on [a, b] with n (even) panels.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

// Five-point first and second derivatives.
inline double d1(const std::function<double(double)>& f, double v, double h) {
    return (f(v - 2 * h) - 8 * f(v - h) + 8 * f(v + h) - f(v + 2 * h)) / (12 * h);
}
inline double d2(const std::function<double(double)>& f, double v, double h) {
    return (-f(v - 2 * h) + 16 * f(v - h) - 30 * f(v) + 16 * f(v + h) - f(v + 2 * h)) / (12 * h * h);
}

inline double rel(double a, double b) { return std::fabs(a - b) / std::max(std::fabs(b), 1e-300); }

// Uniform point in the closed fundamental domain {0 <= x <= 1/2, |z| >= 1, y <= ymax}.
inline std::pair<double, double> random_reduced(std::mt19937_64& rng, double ymax) {
    std::uniform_real_distribution<double> ux(0.0, 0.5), uy(std::sqrt(3.0) / 2.0, ymax);
    for (;;) {
        const double x = ux(rng), y = uy(rng);
        if (x * x + y * y >= 1.0) return {x, y};
    }
}

}  // namespace oracle
