#include "lattice/energy.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "lattice/errors.hpp"
#include "lattice/theta2d.hpp"

namespace lattice {

namespace {

constexpr double kPi = std::numbers::pi;

double power_sum(int k, double alpha, const ModuliPoint& z, const SeriesTruncation& trunc) {
    require_positive_alpha(alpha);
    validate(z);
    const double q_max = lattice_norm_cutoff(alpha, z, k, trunc);
    double sum = 0.0;
    for_each_lattice_vector(z, q_max, [&](long, long, double q) {
        sum += std::pow(q, k) * std::exp(-kPi * alpha * q);
    });
    return sum;
}

}  // namespace

double energy_R(double alpha, const ModuliPoint& z, const SeriesTruncation& trunc) {
    require_positive_alpha(alpha);
    validate(z);
    const double q_max = lattice_norm_cutoff(alpha, z, 2, trunc);
    double sum = 0.0;
    for_each_lattice_vector(z, q_max, [&](long, long, double q) { sum += q * q * std::exp(-kPi * alpha * q); });
    return sum;
}

double energy_generalized(int k, double alpha, const ModuliPoint& z, const SeriesTruncation& trunc) {
    if (k < 1) throw LatticeError(Errc::NonPositiveK, "k must be >= 1, got " + std::to_string(k));
    if (k == 2) return energy_R(alpha, z, trunc);
    return power_sum(k, alpha, z, trunc);
}

double energy_corollary(double alpha, double beta, const ModuliPoint& z, const SeriesTruncation& trunc) {
    require_positive_alpha(alpha);
    if (!(beta > alpha)) {
        throw LatticeError(Errc::OrderViolation, "beta must exceed alpha");
    }
    validate(z);
    const double q_max = lattice_norm_cutoff(alpha, z, 1, trunc);
    const double gap = kPi * (beta - alpha);
    double sum = 0.0;
    for_each_lattice_vector(z, q_max, [&](long, long, double q) {
        sum += q * std::exp(-kPi * alpha * q) * -std::expm1(-gap * q);
    });
    return sum;
}

double energy_corollary_quadrature(double alpha, double beta, const ModuliPoint& z,
                                   const SeriesTruncation& trunc) {
    require_positive_alpha(alpha);
    if (!(beta > alpha)) {
        throw LatticeError(Errc::OrderViolation, "beta must exceed alpha");
    }
    auto f = [&](double g) { return energy_R(g, z, trunc); };
    return kPi * boost::math::quadrature::gauss<double, 32>::integrate(f, alpha, beta);
}

std::pair<double, EnergyDecompositionX> dR_dx(double alpha, const ModuliPoint& z, const SeriesTruncation& trunc) {
    require_positive_alpha(alpha);
    validate(z);
    if (z.x < kBoundaryXGuard || z.x > 0.5 - kBoundaryXGuard) {
        throw LatticeError(Errc::BoundaryX, "x must lie strictly inside (0, 1/2), got " + std::to_string(z.x));
    }
    const double y = z.y;
    const double X = y / alpha;
    const double a2 = alpha * alpha;
    const double a3 = a2 * alpha;
    const double a4 = a3 * alpha;

    EnergyDecompositionX d;
    d.C = (2.0 / kPi) * std::sqrt(y) * std::pow(alpha, -4.5) * -theta1({0, 1}, X, z.x, trunc) *
          std::exp(-kPi * alpha * y);
    d.Phi_A = kPi * a4 * y * y + a3 * y + 3.0 * a2 / (4.0 * kPi) +
              (3.0 * alpha * y / kPi + 2.0 * a2 * y * y) * theta_y_ratio(1, 1, X, z.x, trunc) +
              (y * y / kPi) * theta_y_ratio(2, 1, X, z.x, trunc);

    const double scale = std::abs(d.Phi_A);
    for (int n = 2; n <= kTailTermCap; ++n) {
        const double nd = n;
        const double w = std::exp(-alpha * kPi * y * (nd * nd - 1.0));
        const double c1 = (kPi * a4 * y * y * std::pow(nd, 5) + a3 * y * nd * nd * nd + 3.0 * a2 * nd / (4.0 * kPi)) * w;
        const double c2 = (3.0 * alpha * y * nd / kPi + 2.0 * a2 * y * y * nd * nd * nd) * w;
        const double c3 = (y * y * nd / kPi) * w;
        if (c1 * nd * std::exp(std::min(700.0, kPi / (4.0 * X))) < trunc.abs_tolerance * 1e-3 * scale) break;
        d.Phi_B[0] += c1 * theta_y_ratio(0, n, X, z.x, trunc);
        d.Phi_B[1] += c2 * theta_y_ratio(1, n, X, z.x, trunc);
        d.Phi_B[2] += c3 * theta_y_ratio(2, n, X, z.x, trunc);
    }
    return {reassemble(d), d};
}

double reassemble(const EnergyDecompositionX& d) {
    return -d.C * (d.Phi_A + d.Phi_B[0] + d.Phi_B[1] + d.Phi_B[2]);
}

std::pair<double, EnergyDecompositionY> dR_dy_line(double alpha, double y, const SeriesTruncation& trunc) {
    require_positive_alpha(alpha);
    validate(ModuliPoint{0.5, y});
    const double X = y / alpha;
    const double a = alpha;
    EnergyDecompositionY d;
    d.prefactor = std::pow(alpha, -4.5) / (kPi * kPi * std::sqrt(y));

    auto add = [&](std::array<double, 4>& into, int n, double mult) {
        const double nd = n;
        const double n2 = nd * nd;
        const double w = mult * std::exp(-kPi * a * y * n2);
        const double Y = 0.5 * nd;
        const double p1 = -kPi * kPi * kPi * std::pow(a, 5) * y * y * y * n2 * n2 * n2 +
                          1.5 * kPi * kPi * std::pow(a, 4) * y * y * n2 * n2 + 0.75 * kPi * a * a * a * y * n2 +
                          0.375 * a * a;
        const double p2 = -kPi * kPi * a * a * a * y * y * y * n2 * n2 + 3.0 * kPi * a * a * y * y * n2 + 5.25 * a * y;
        const double p3 = kPi * a * y * y * y * n2 + 5.5 * y * y;
        const double p4 = y * y * y / a;
        into[0] += p1 * w * theta1({0, 0}, X, Y, trunc);
        into[1] += p2 * w * theta1({1, 0}, X, Y, trunc);
        into[2] += p3 * w * theta1({2, 0}, X, Y, trunc);
        into[3] += p4 * w * theta1({3, 0}, X, Y, trunc);
        return std::abs(p1 * w) + std::abs(p2 * w) + std::abs(p3 * w) + std::abs(p4 * w);
    };

    add(d.I_a, 0, 1.0);
    add(d.I_a, 1, 2.0);
    const double scale = std::abs(d.I_a[0]) + std::abs(d.I_a[1]) + std::abs(d.I_a[2]) + std::abs(d.I_a[3]);
    const double growth = std::exp(std::min(700.0, kPi / (4.0 * X))) / std::pow(std::min(X, 1.0), 3.5);
    for (int n = 2; n <= kTailTermCap; ++n) {
        const double size = add(d.I_b, n, 2.0);
        if (size * growth < trunc.abs_tolerance * 1e-3 * scale) break;
    }
    return {reassemble(d), d};
}

double reassemble(const EnergyDecompositionY& d) {
    double s = 0.0;
    for (double v : d.I_a) s += v;
    for (double v : d.I_b) s += v;
    return d.prefactor * s;
}

std::pair<double, RadialDecomposition> radial_operator(double alpha, double y, const SeriesTruncation& trunc) {
    require_positive_alpha(alpha);
    const ModuliPoint z{0.5, y};
    validate(z);
    RadialDecomposition r;
    const double q_max = lattice_norm_cutoff(alpha, z, 4, trunc);
    // A lattice vector (m', n') of z = 1/2 + iy has norm y n^2 + (m + n/2)^2/y
    // with n = m', m = n'.
    for_each_lattice_vector(z, q_max, [&](long mp, long np, double) {
        const double n = static_cast<double>(mp);
        const double s = static_cast<double>(np) + 0.5 * n;
        const double S = y * n * n + s * s / y;
        const double d = n * n - s * s / (y * y);
        const double e = std::exp(-kPi * alpha * S);
        r.W_a += d * d * S * S * e;
        r.W_b += d * d * e;
        r.W_c += n * n * S * e;
        r.W_d += d * d * S * e;
        r.W_e += n * n * S * S * e;
    });
    return {reassemble(r, alpha, y), r};
}

double reassemble(const RadialDecomposition& d, double alpha, double y) {
    return kPi * kPi * alpha * alpha * d.W_a + 2.0 * d.W_b + (4.0 / y) * d.W_c - 4.0 * kPi * alpha * d.W_d -
           (2.0 * kPi * alpha / y) * d.W_e;
}

}  // namespace lattice
