#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "timearrow/catalog.hpp"

namespace timearrow {

/// Densities below this floor are treated as exact zeros: the rank-deficient
/// models make log det = -inf, and the geometric mean must come out as an
/// exact 0 rather than a quadrature artifact.
inline constexpr double kLogFloor = 1e-13;

/// Power spectral density sampled on M uniform angles of [-pi, pi).
/// The angles are midpoint-offset (theta_j = -pi + (j+1/2) 2pi/M) so that
/// boundary singularities of non-rational symbols are never hit exactly;
/// on a uniform periodic grid the trapezoid mean is the flat mean either way.
struct SpectralGrid {
  std::size_t M = 0;
  std::vector<double> thetas;
  std::vector<Eigen::MatrixXcd> values;  // Hermitian PSD, rank <= 1 for rank-one models
};

/// Phi(theta) = G(theta) G(theta)^* with G stacking channel boundary values.
Eigen::MatrixXcd spectrum_at(const ProcessModel& m, double theta);

/// pre: M >= 8 and a power of two.
SpectralGrid spectrum_grid(const ProcessModel& m, std::size_t M);

/// Geometric mean exp((1/2pi) int log density) of a scalar density sampled on
/// the grid; exact 0 once any sample falls below the log floor.
double szego_mean(std::span<const double> density);

/// exp of the mean of log det Phi; 0 when the determinant degenerates
/// anywhere on the grid (the deterministic-direction case).
double wiener_masani_det(const SpectralGrid& grid);

/// Builds both analytic factorizations of the moving-average spectrum and
/// returns the largest Frobenius gap between each factor product and Phi.
double ma_factorization_check(double alpha, std::size_t M);

}  // namespace timearrow
