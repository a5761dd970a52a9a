#include "lattice/theta2d.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "lattice/errors.hpp"

namespace lattice {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

void require_positive_alpha(double alpha) {
    if (!(alpha > 0) || !std::isfinite(alpha)) {
        throw LatticeError(Errc::NonPositiveAlpha, "alpha must be positive, got " + std::to_string(alpha));
    }
}

double lattice_norm_cutoff(double alpha, const ModuliPoint& z, int k, const SeriesTruncation& trunc) {
    require_positive_alpha(alpha);
    validate(trunc);
    // Shortest nonzero vector of the lattice is 1/Im of the reduced point.
    const double q_min = 1.0 / reduce_to_fundamental(z).first.y;
    // Lattice points with Q in [q, q + dq] number about pi dq, so the tail
    // beyond q_max is roughly q_max^k exp(-pi alpha q_max) / alpha.
    const double base = -std::log(trunc.abs_tolerance) + 3.0;
    double q_max = q_min + base / (kPi * alpha);
    for (int it = 0; it < 4; ++it) {
        const double extra = k * std::log(std::max(1.0, q_max / q_min)) +
                             std::log(1.0 + kPi * q_max / alpha);
        q_max = q_min + (base + extra) / (kPi * alpha);
    }
    return q_max;
}

void for_each_lattice_vector(const ModuliPoint& z, double q_max,
                             const std::function<void(long, long, double)>& f) {
    validate(z);
    // Q = ((mx+n)^2 + m^2 y^2)/y <= q_max  <=>  m^2 y <= q_max and
    // |mx + n| <= sqrt(q_max y - m^2 y^2).
    const long m_max = static_cast<long>(std::floor(std::sqrt(q_max / z.y)));
    for (long m = -m_max; m <= m_max; ++m) {
        const double md = static_cast<double>(m);
        const double room = q_max * z.y - md * md * z.y * z.y;
        if (room < 0) continue;
        const double half = std::sqrt(room);
        const long n_lo = static_cast<long>(std::ceil(-md * z.x - half));
        const long n_hi = static_cast<long>(std::floor(-md * z.x + half));
        for (long n = n_lo; n <= n_hi; ++n) {
            if (m == 0 && n == 0) continue;
            f(m, n, lattice_norm_sq(z, m, n));
        }
    }
}

double theta2_direct(const ThetaParams& p) {
    require_positive_alpha(p.alpha);
    validate(p.z);
    const double q_max = lattice_norm_cutoff(p.alpha, p.z, 0, p.trunc);
    double sum = 0.0;
    for_each_lattice_vector(p.z, q_max, [&](long, long, double q) { sum += std::exp(-kPi * p.alpha * q); });
    return 1.0 + sum;
}

double theta2_expansion(const ThetaParams& p) {
    require_positive_alpha(p.alpha);
    validate(p.z);
    const double X = p.z.y / p.alpha;
    const double scale = std::sqrt(X);
    const double head = theta1({0, 0}, X, 0.0, p.trunc);
    double sum = 0.5 * head;
    for (int n = 1; n <= p.trunc.max_terms; ++n) {
        const double w = std::exp(-p.alpha * kPi * p.z.y * n * n);
        if (w * head <= p.trunc.abs_tolerance * 1e-2 * sum) return 2.0 * scale * sum;
        sum += w * theta1({0, 0}, X, n * p.z.x, p.trunc);
    }
    throw LatticeError(Errc::TruncationNotReached, "theta expansion did not converge");
}

}  // namespace lattice
