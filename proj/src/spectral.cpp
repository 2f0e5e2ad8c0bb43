#include "timearrow/spectral.hpp"

#include <cmath>
#include <numbers>

namespace timearrow {

namespace {

bool is_power_of_two(std::size_t M) { return M != 0 && (M & (M - 1)) == 0; }

Eigen::VectorXcd boundary_values(const ProcessModel& m, double theta) {
  Eigen::VectorXcd g(m.n());
  for (int c = 0; c < m.n(); ++c) g(c) = m.channels[c].evaluate_on_circle(theta);
  return g;
}

Eigen::MatrixXcd hermitize(const Eigen::MatrixXcd& a) { return 0.5 * (a + a.adjoint()); }

}  // namespace

Eigen::MatrixXcd spectrum_at(const ProcessModel& m, double theta) {
  const Eigen::VectorXcd g = boundary_values(m, theta);
  return m.noise_variance * (g * g.adjoint());
}

SpectralGrid spectrum_grid(const ProcessModel& m, std::size_t M) {
  if (M < 8 || !is_power_of_two(M))
    raise(errc::invalid_argument, "grid size must be a power of two >= 8");
  SpectralGrid grid;
  grid.M = M;
  grid.thetas.resize(M);
  grid.values.resize(M);
  const double h = 2.0 * std::numbers::pi / double(M);
  for (std::size_t j = 0; j < M; ++j) {
    grid.thetas[j] = -std::numbers::pi + (double(j) + 0.5) * h;
    grid.values[j] = spectrum_at(m, grid.thetas[j]);
  }
  return grid;
}

double szego_mean(std::span<const double> density) {
  if (density.empty()) raise(errc::invalid_argument, "empty density");
  double log_sum = 0.0;
  for (double d : density) {
    if (d < 0.0) raise(errc::negative_density, "density value " + std::to_string(d));
    if (d < kLogFloor) return 0.0;
    log_sum += std::log(d);
  }
  return std::exp(log_sum / double(density.size()));
}

double wiener_masani_det(const SpectralGrid& grid) {
  double log_sum = 0.0;
  for (const Eigen::MatrixXcd& phi : grid.values) {
    const double det = hermitize(phi).determinant().real();
    if (det < kLogFloor) return 0.0;
    log_sum += std::log(det);
  }
  return std::exp(log_sum / double(grid.values.size()));
}

double ma_factorization_check(double alpha, std::size_t M) {
  if (alpha == 0.0) raise(errc::zero_alpha, "alpha must be nonzero");
  const SpectralGrid grid = spectrum_grid(ma_example(alpha), M);
  double worst = 0.0;
  for (std::size_t j = 0; j < grid.M; ++j) {
    const cplx z = std::polar(1.0, grid.thetas[j]);
    const cplx zinv = 1.0 / z;
    Eigen::Vector2cd left;   // analytic factor: (1 + alpha z, 1)
    left << 1.0 + alpha * z, 1.0;
    Eigen::Vector2cd right;  // co-analytic factor: (z^-1 + alpha, z^-1)
    right << zinv + alpha, zinv;
    const Eigen::Matrix2cd phi = grid.values[j];
    worst = std::max(worst, (left * left.adjoint() - phi).norm());
    worst = std::max(worst, (right * right.adjoint() - phi).norm());
  }
  return worst;
}

}  // namespace timearrow
