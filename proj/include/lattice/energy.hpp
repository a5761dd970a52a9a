#pragma once

#include <array>
#include <utility>

#include "lattice/moduli.hpp"
#include "lattice/theta1d.hpp"

namespace lattice {

// -dR/dx = C (Phi_A + sum Phi_B)
struct EnergyDecompositionX {
    double C = 0.0;
    double Phi_A = 0.0;
    std::array<double, 3> Phi_B{};
};

// dR/dy on x = 1/2 equals prefactor * (sum I_a + sum I_b)
struct EnergyDecompositionY {
    std::array<double, 4> I_a{};
    std::array<double, 4> I_b{};
    double prefactor = 0.0;
};

// (d^2/dy^2 + (2/y) d/dy) R on x = 1/2 assembled from five double sums.
struct RadialDecomposition {
    double W_a = 0.0;
    double W_b = 0.0;
    double W_c = 0.0;
    double W_d = 0.0;
    double W_e = 0.0;
};

constexpr double kBoundaryXGuard = 1e-9;
constexpr int kTailTermCap = 30;

// sum |P|^4 exp(-pi alpha |P|^2) over the unit-density lattice of z.
double energy_R(double alpha, const ModuliPoint& z, const SeriesTruncation& trunc = {});

// sum |P|^(2k) exp(-pi alpha |P|^2)
double energy_generalized(int k, double alpha, const ModuliPoint& z, const SeriesTruncation& trunc = {});

// sum |P|^2 (exp(-pi alpha |P|^2) - exp(-pi beta |P|^2))
double energy_corollary(double alpha, double beta, const ModuliPoint& z, const SeriesTruncation& trunc = {});

// pi * integral_alpha^beta energy_R(gamma, z) dgamma by 32-point Gauss-Legendre.
double energy_corollary_quadrature(double alpha, double beta, const ModuliPoint& z,
                                   const SeriesTruncation& trunc = {});

std::pair<double, EnergyDecompositionX> dR_dx(double alpha, const ModuliPoint& z,
                                              const SeriesTruncation& trunc = {});

double reassemble(const EnergyDecompositionX& d);

std::pair<double, EnergyDecompositionY> dR_dy_line(double alpha, double y, const SeriesTruncation& trunc = {});

double reassemble(const EnergyDecompositionY& d);

std::pair<double, RadialDecomposition> radial_operator(double alpha, double y, const SeriesTruncation& trunc = {});

double reassemble(const RadialDecomposition& d, double alpha, double y);

}  // namespace lattice
