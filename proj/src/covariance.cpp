#include "timearrow/covariance.hpp"

#include <algorithm>
#include <cmath>

namespace timearrow {

const char* to_string(Direction d) noexcept {
  return d == Direction::Forward ? "forward" : "backward";
}

AutocovarianceSequence::AutocovarianceSequence(int n, std::vector<Eigen::MatrixXcd> gammas,
                                               double truncation_error)
    : n_(n), gammas_(std::move(gammas)), truncation_error_(truncation_error) {
  if (gammas_.empty()) raise(errc::invalid_argument, "need at least Gamma_0");
}

const Eigen::MatrixXcd& AutocovarianceSequence::gamma(int k) const {
  if (k < 0 || k > max_lag())
    raise(errc::lag_unavailable, "lag " + std::to_string(k) + " beyond max lag " +
                                     std::to_string(max_lag()));
  return gammas_[k];
}

Eigen::MatrixXcd AutocovarianceSequence::gamma_at(int k) const {
  if (k >= 0) return gamma(k);
  return gamma(-k).adjoint();
}

std::size_t default_autocov_truncation(const ProcessModel& m, int K) {
  std::size_t L = 1;
  for (const Symbol& s : m.channels) {
    if (s.kind() == SymbolKind::BuiltinHarmonic)
      L = std::max(L, std::size_t(100000));
    else if (auto deg = s.finite_degree())
      L = std::max(L, *deg + 1 + std::size_t(K));
    else
      L = std::max(L, std::max(s.truncation_default(), std::size_t(4096)) + std::size_t(K));
  }
  return std::max(L, std::size_t(K) + 1);
}

AutocovarianceSequence autocov(const ProcessModel& m, int K, std::size_t L) {
  if (K < 0) raise(errc::invalid_argument, "max lag must be nonnegative");
  if (L <= std::size_t(K))
    raise(errc::truncation_too_short, "truncation " + std::to_string(L) +
                                          " must exceed max lag " + std::to_string(K));
  const int n = m.n();

  // Stack channel coefficient windows into G: column l is G_l in C^n.
  Eigen::MatrixXcd G(n, L);
  double tail_sum = 0.0;
  for (int c = 0; c < n; ++c) {
    const CoefficientWindow w = m.channels[c].taylor_coefficients(L);
    for (std::size_t l = 0; l < L; ++l) G(c, l) = w.values[l];
    tail_sum += w.tail_bound;
  }
  const double total_energy = G.squaredNorm() + tail_sum;

  std::vector<Eigen::MatrixXcd> gammas(K + 1);
  for (int k = 0; k <= K; ++k) {
    const auto len = static_cast<Eigen::Index>(L) - k;
    gammas[k] = m.noise_variance *
                (G.middleCols(k, len) * G.middleCols(0, len).adjoint());
  }
  gammas[0] = 0.5 * (gammas[0] + gammas[0].adjoint().eval());

  // Cauchy-Schwarz bound on the dropped cross terms, uniform over k <= K.
  const double truncation_error = std::sqrt(tail_sum * total_energy);
  return AutocovarianceSequence(n, std::move(gammas), truncation_error);
}

AutocovarianceSequence autocov(const ProcessModel& m, int K) {
  return autocov(m, K, default_autocov_truncation(m, K));
}

WindowMatrix window_matrix(const AutocovarianceSequence& cov, int p, Direction direction) {
  if (p < 1) raise(errc::invalid_argument, "window must be at least 1");
  if (p > cov.max_lag())
    raise(errc::lag_unavailable, "window " + std::to_string(p) + " needs lags beyond " +
                                     std::to_string(cov.max_lag()));
  const int n = cov.n();
  WindowMatrix w;
  w.n = n;
  w.p = p;
  w.direction = direction;
  w.body.resize(n * p, n * p);
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const int lag = direction == Direction::Forward ? j - i : i - j;
      w.body.block(n * i, n * j, n, n) = cov.gamma_at(lag);
    }
  return w;
}

Eigen::MatrixXcd cross_blocks(const AutocovarianceSequence& cov, int p, Direction direction) {
  if (p < 1) raise(errc::invalid_argument, "window must be at least 1");
  if (p > cov.max_lag())
    raise(errc::lag_unavailable, "window " + std::to_string(p) + " needs lags beyond " +
                                     std::to_string(cov.max_lag()));
  const int n = cov.n();
  Eigen::MatrixXcd c(n, n * p);
  for (int j = 0; j < p; ++j) {
    const Eigen::MatrixXcd& g = cov.gamma(j + 1);
    if (direction == Direction::Forward)
      c.middleCols(n * j, n) = g;
    else
      c.middleCols(n * j, n) = g.adjoint();
  }
  return c;
}

}  // namespace timearrow
