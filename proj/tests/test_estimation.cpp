#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "support/test_oracles.hpp"
#include "timearrow/estimation.hpp"
#include "timearrow/spectral.hpp"

using namespace timearrow;

namespace {

// reference backward trace of the harmonic model at window 64, from the
// long-double closed-form oracle in tests/oracle/trace_oracle.cpp
constexpr double kHarmonicBackwardTrace64 = 9.169954543351978e-04;

Eigen::Matrix2cd mat2(double a, double b, double c, double d) {
  Eigen::Matrix2cd m;
  m << a, b, c, d;
  return m;
}

double max_entry_error(const Eigen::MatrixXcd& got, const Eigen::MatrixXcd& want) {
  return (got - want).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("MA model: forward error is the one-matrix, backward concentrates alpha^2") {
  const AutocovarianceSequence cov = autocov(ma_example(2.0), 8);

  const PredictionSolution fwd = predict(cov, 1, Direction::Forward);
  CHECK(max_entry_error(fwd.error_covariance, mat2(1, 1, 1, 1)) < 1e-12);
  // optimal forward estimator is alpha * y_{-1} for the x channel
  CHECK(max_entry_error(fwd.coeffs[0], mat2(0, 2, 0, 0)) < 1e-12);

  const PredictionSolution bwd = predict(cov, 1, Direction::Backward);
  CHECK(max_entry_error(bwd.error_covariance, mat2(4, 0, 0, 0)) < 1e-12);
  // optimal backward estimator is (x_1 - y_1)/alpha for both channels
  CHECK(max_entry_error(bwd.coeffs[0], mat2(0.5, -0.5, 0.5, -0.5)) < 1e-12);

  for (int p = 2; p <= 8; ++p) {
    CHECK(max_entry_error(predict(cov, p, Direction::Forward).error_covariance,
                          mat2(1, 1, 1, 1)) < 1e-10);
    CHECK(max_entry_error(predict(cov, p, Direction::Backward).error_covariance,
                          mat2(4, 0, 0, 0)) < 1e-10);
  }
}

TEST_CASE("delay-pair model against the brute-force SVD oracle") {
  const ProcessModel m = catalog_lookup("delay-pair");
  const AutocovarianceSequence cov = autocov(m, 2);
  const PredictionSolution sol = predict(cov, 1, Direction::Forward);

  const Eigen::MatrixXd oracle = oracles::svd_lstsq_error(
      cov.gamma(0).real(), cross_blocks(cov, 1, Direction::Forward).real(),
      cov.gamma(0).real());
  CHECK(max_entry_error(sol.error_covariance, oracle.cast<cplx>()) < 1e-12);
  CHECK(max_entry_error(sol.error_covariance, mat2(1, 0, 0, 0)) < 1e-12);
  CHECK(sol.rank_used == 2);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(sol.error_covariance);
  CHECK(eig.eigenvalues()(0) >= -1e-8 * sol.error_covariance.trace().real());
}

TEST_CASE("scalar models see no time arrow") {
  const ProcessModel m = catalog_lookup("scalar-ma");
  const AutocovarianceSequence cov = autocov(m, 20);
  for (int p = 1; p <= 20; ++p) {
    const auto f = predict(cov, p, Direction::Forward).error_covariance;
    const auto b = predict(cov, p, Direction::Backward).error_covariance;
    CHECK((f - b).norm() <= 1e-10 * cov.gamma(0).norm());
  }
}

TEST_CASE("scalar forward error approaches the geometric mean of the density") {
  const ProcessModel m = catalog_lookup("scalar-ma");
  const SpectralGrid grid = spectrum_grid(m, 4096);
  std::vector<double> density;
  for (const auto& phi : grid.values) density.push_back(phi(0, 0).real());
  const double geo = szego_mean(density);

  const AutocovarianceSequence cov = autocov(m, 64);
  const double limit = predict(cov, 64, Direction::Forward).error_covariance(0, 0).real();
  CHECK(std::abs(limit - geo) < 1e-4);
}

TEST_CASE("error_sweep on the MA model saturates at window one") {
  const auto sols = error_sweep(ma_example(2.0), {1, 2, 4, 8}, Direction::Forward);
  REQUIRE(sols.size() == 4);
  for (const auto& s : sols)
    CHECK(max_entry_error(s.error_covariance, mat2(1, 1, 1, 1)) < 1e-10);
}

TEST_CASE("harmonic backward traces decrease strictly; forward approaches 2 from above") {
  std::vector<int> windows;
  for (int p = 1; p <= 64; ++p) windows.push_back(p);

  const auto bwd = error_sweep(harmonic_example(), windows, Direction::Backward, kDeepRankTol);
  double prev = std::numeric_limits<double>::infinity();
  for (const auto& s : bwd) {
    const double t = s.error_covariance.trace().real();
    CHECK(t < prev);
    prev = t;
  }
  CHECK(prev == doctest::Approx(kHarmonicBackwardTrace64).epsilon(1e-6));

  const auto fwd = error_sweep(harmonic_example(), {1, 4, 16, 64}, Direction::Forward,
                               kDeepRankTol);
  for (std::size_t i = 0; i < fwd.size(); ++i) {
    const double t = fwd[i].error_covariance.trace().real();
    const int p = 1 << (2 * i);
    CHECK(t >= 2.0 - 1e-9);
    // feasible-estimator bound: copying the known noise terms leaves at most
    // the coefficient tail sum_{l>p} 1/(1+l)^2 <= 1/p above the limit
    CHECK(t <= 2.0 + 1.0 / p + 1e-9);
  }
}

TEST_CASE("Loewner monotonicity of the error covariance in the window") {
  for (const std::string& name : {"ma2", "scalar-ma", "delay-pair", "harmonic"}) {
    const ProcessModel m = catalog_lookup(name);
    const AutocovarianceSequence cov = autocov(m, 13);
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      Eigen::MatrixXcd prev;
      for (int p = 1; p <= 13; ++p) {
        const Eigen::MatrixXcd omega =
            predict(cov, p, d, kDeepRankTol).error_covariance;
        // conditioning on a window never beats Gamma_0
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> vs_gamma0(
            cov.gamma(0) - omega +
            1e-8 * Eigen::MatrixXcd::Identity(m.n(), m.n()));
        CHECK(vs_gamma0.eigenvalues()(0) >= -1e-10);
        if (p > 1) {
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(
              prev - omega + 1e-8 * Eigen::MatrixXcd::Identity(m.n(), m.n()));
          CHECK(eig.eigenvalues()(0) >= -1e-10);
        }
        prev = omega;
      }
    }
  }
}

TEST_CASE("MA determinants stay degenerate in both directions") {
  const AutocovarianceSequence cov = autocov(ma_example(2.0), 8);
  for (int p = 1; p <= 8; ++p) {
    CHECK(std::abs(predict(cov, p, Direction::Forward).error_covariance.determinant()) <= 1e-8);
    CHECK(std::abs(predict(cov, p, Direction::Backward).error_covariance.determinant()) <= 1e-8);
  }
}

TEST_CASE("pseudo-inverse cutoff stability on well-conditioned catalog models") {
  for (const std::string& name : {"ma2", "ma05", "scalar-ma", "white", "delay-pair"}) {
    const ProcessModel m = catalog_lookup(name);
    const AutocovarianceSequence cov = autocov(m, 10);
    for (Direction d : {Direction::Forward, Direction::Backward})
      for (int p : {1, 5, 10}) {
        const auto lo = predict(cov, p, d, 1e-12).error_covariance;
        const auto hi = predict(cov, p, d, 1e-8).error_covariance;
        CHECK((lo - hi).norm() < 1e-6);
      }
  }
  // the harmonic window matrices hide information below the coarse cutoffs
  // once p grows; stability over [1e-12, 1e-8] only holds for shallow windows
  const AutocovarianceSequence cov = autocov(harmonic_example(), 4);
  for (int p : {1, 2, 4}) {
    const auto lo = predict(cov, p, Direction::Backward, 1e-12).error_covariance;
    const auto hi = predict(cov, p, Direction::Backward, 1e-8).error_covariance;
    CHECK((lo - hi).norm() < 1e-6);
  }
}

TEST_CASE("numeric determinism verdicts") {
  const std::vector<int> windows = {1, 2, 4, 8, 16, 32, 64};

  const DeterminismReport harmonic =
      is_backward_deterministic_numeric(harmonic_example(), windows, 1e-6);
  CHECK(harmonic.verdict == NumericVerdict::Inconclusive);  // still falling at p=64
  for (std::size_t i = 1; i < harmonic.traces.size(); ++i)
    CHECK(harmonic.traces[i] < harmonic.traces[i - 1]);
  CHECK(harmonic.traces.back() == doctest::Approx(kHarmonicBackwardTrace64).epsilon(1e-6));

  const DeterminismReport ma = is_backward_deterministic_numeric(ma_example(2.0), windows, 1e-6);
  CHECK(ma.verdict == NumericVerdict::NotDeterministic);
  CHECK(ma.traces.back() == doctest::Approx(4.0).epsilon(1e-10));

  const ProcessModel duplicated =
      custom("gg", {Symbol::rational({1.0, 0.5}, {1.0}), Symbol::rational({1.0, 0.5}, {1.0})});
  const DeterminismReport dup = is_backward_deterministic_numeric(duplicated, windows, 1e-6);
  CHECK(dup.verdict == NumericVerdict::NotDeterministic);
  CHECK(dup.traces.back() > 1.0);

  CHECK_THROWS_AS(is_backward_deterministic_numeric(ma_example(2.0), {1, 2}, 1e-6), Error);
}

TEST_CASE("prediction error covariance is Hermitian PSD") {
  for (const std::string& name : catalog_names()) {
    const ProcessModel m = catalog_lookup(name);
    const AutocovarianceSequence cov = autocov(m, 6);
    for (Direction d : {Direction::Forward, Direction::Backward}) {
      const auto omega = predict(cov, 3, d).error_covariance;
      CHECK((omega - omega.adjoint()).norm() < 1e-12);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(omega);
      CHECK(eig.eigenvalues()(0) >= -1e-8 * std::max(omega.trace().real(), 1e-30));
    }
  }
}

TEST_CASE("input validation") {
  const AutocovarianceSequence cov = autocov(ma_example(2.0), 4);
  CHECK_THROWS_AS(predict(cov, 5, Direction::Forward), Error);
  try {
    predict(cov, 5, Direction::Forward);
  } catch (const Error& e) {
    CHECK(e.code() == errc::window_exceeds_lags);
  }
  CHECK_THROWS_AS(predict(cov, 1, Direction::Forward, 0.0), Error);
  CHECK_THROWS_AS(predict(cov, 1, Direction::Forward, 1.0), Error);
  CHECK_THROWS_AS(error_sweep(ma_example(2.0), {4, 2, 1}, Direction::Forward), Error);
  CHECK_THROWS_AS(error_sweep(ma_example(2.0), {}, Direction::Forward), Error);

  std::vector<Eigen::MatrixXcd> zeros(3, Eigen::MatrixXcd::Zero(2, 2));
  const AutocovarianceSequence degenerate(2, zeros, 0.0);
  try {
    predict(degenerate, 1, Direction::Forward);
    FAIL("expected DegenerateGamma0");
  } catch (const Error& e) {
    CHECK(e.code() == errc::degenerate_gamma0);
  }
}
