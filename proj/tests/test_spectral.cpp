#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "timearrow/spectral.hpp"

using namespace timearrow;

TEST_CASE("spectrum of the MA model at theta = 0") {
  const Eigen::MatrixXcd phi = spectrum_at(ma_example(2.0), 0.0);
  Eigen::Matrix2d expected;
  expected << 9.0, 3.0, 3.0, 1.0;
  CHECK((phi - expected.cast<cplx>()).norm() < 1e-14);
}

TEST_CASE("white noise spectrum is identically one") {
  const ProcessModel white = custom("white", {Symbol::rational({1.0}, {1.0})});
  const SpectralGrid grid = spectrum_grid(white, 16);
  for (const auto& phi : grid.values) {
    REQUIRE(phi.rows() == 1);
    CHECK(std::abs(phi(0, 0) - cplx(1.0)) < 1e-15);
  }
}

TEST_CASE("grid geometry and rank-one structure") {
  const SpectralGrid grid = spectrum_grid(ma_example(1.5), 64);
  REQUIRE(grid.thetas.size() == 64);
  CHECK(grid.thetas.front() > -M_PI);
  CHECK(grid.thetas.back() < M_PI);
  const double step = grid.thetas[1] - grid.thetas[0];
  for (std::size_t j = 1; j < grid.thetas.size(); ++j)
    CHECK(grid.thetas[j] - grid.thetas[j - 1] == doctest::Approx(step));

  for (const auto& phi : grid.values) {
    CHECK((phi - phi.adjoint()).norm() < 1e-10);  // Hermitian
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(phi);
    CHECK(eig.eigenvalues()(0) > -1e-10);                            // PSD
    CHECK(eig.eigenvalues()(0) <= 1e-8 * eig.eigenvalues()(1) + 1e-300);  // rank one
    CHECK(std::abs(phi.determinant()) < 1e-12);
  }
  CHECK_THROWS_AS(spectrum_grid(ma_example(1.0), 7), Error);
  CHECK_THROWS_AS(spectrum_grid(ma_example(1.0), 48), Error);
}

TEST_CASE("szego mean of a constant density") {
  std::vector<double> density(64, 4.0);
  CHECK(szego_mean(density) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("szego mean of the MA scalar densities matches the closed form") {
  // oracle: 50-digit quadrature of log|1 + alpha e^{i theta}|^2 gives
  // geometric mean 1 for |alpha| < 1 and alpha^2 for |alpha| > 1
  for (auto [alpha, expected] : {std::pair{0.5, 1.0}, std::pair{2.0, 4.0}}) {
    const ProcessModel scalar = custom("s", {Symbol::rational({1.0, alpha}, {1.0})});
    const SpectralGrid grid = spectrum_grid(scalar, 4096);
    std::vector<double> density;
    for (const auto& phi : grid.values) density.push_back(phi(0, 0).real());
    CHECK(szego_mean(density) == doctest::Approx(expected).epsilon(1e-6));
  }
}

TEST_CASE("szego mean floors tiny densities to an exact zero") {
  std::vector<double> density(32, 1.0);
  density[7] = 1e-14;
  CHECK(szego_mean(density) == 0.0);
  density[7] = -0.25;
  CHECK_THROWS_AS(szego_mean(density), Error);
}

TEST_CASE("szego mean is scale equivariant") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> val(0.1, 3.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> d(128);
    for (double& x : d) x = val(rng);
    const double c = val(rng);
    std::vector<double> cd = d;
    for (double& x : cd) x *= c;
    CHECK(szego_mean(cd) == doctest::Approx(c * szego_mean(d)).epsilon(1e-9));
  }
}

TEST_CASE("szego mean stays within the density bounds") {
  std::mt19937 rng(13);
  std::uniform_real_distribution<double> val(0.2, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> d(64);
    double lo = 1e9, hi = 0.0;
    for (double& x : d) {
      x = val(rng);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
    }
    const double mean = szego_mean(d);
    CHECK(mean >= lo - 1e-12);
    CHECK(mean <= hi + 1e-12);
  }
}

TEST_CASE("wiener-masani determinant of rank-one spectra is exactly zero") {
  CHECK(wiener_masani_det(spectrum_grid(ma_example(2.0), 512)) == 0.0);
  CHECK(wiener_masani_det(spectrum_grid(harmonic_example(), 512)) == 0.0);
}

TEST_CASE("wiener-masani determinant of a constant diagonal spectrum") {
  SpectralGrid grid;
  grid.M = 16;
  for (int j = 0; j < 16; ++j) {
    grid.thetas.push_back(j);
    grid.values.push_back(Eigen::Vector2d(2.0, 3.0).asDiagonal().toDenseMatrix().cast<cplx>());
  }
  CHECK(wiener_masani_det(grid) == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("wiener-masani of a diagonal spectrum equals the product of szego means") {
  const std::size_t M = 256;
  SpectralGrid grid;
  grid.M = M;
  std::vector<double> d1, d2;
  for (std::size_t j = 0; j < M; ++j) {
    const double theta = -M_PI + (j + 0.5) * 2.0 * M_PI / M;
    d1.push_back(2.0 + std::cos(theta));
    d2.push_back(1.5 + std::sin(theta) * 0.5);
    grid.thetas.push_back(theta);
    grid.values.push_back(Eigen::Vector2d(d1.back(), d2.back()).asDiagonal().toDenseMatrix().cast<cplx>());
  }
  CHECK(wiener_masani_det(grid) ==
        doctest::Approx(szego_mean(d1) * szego_mean(d2)).epsilon(1e-8));
}

TEST_CASE("both MA factorizations reproduce the spectrum") {
  CHECK(ma_factorization_check(2.0, 512) <= 1e-12);
  CHECK(ma_factorization_check(0.5, 512) <= 1e-12);
  CHECK(ma_factorization_check(1.0, 8) <= 1e-12);
}
