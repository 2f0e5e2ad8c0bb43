#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "timearrow/catalog.hpp"

namespace timearrow {

enum class Direction { Forward, Backward };

const char* to_string(Direction d) noexcept;

/// Autocovariances Gamma_k = E[xi_t xi_{t-k}^*] for k = 0..K. Only
/// nonnegative lags are stored; Gamma_{-k} = Gamma_k^* is applied on access.
class AutocovarianceSequence {
 public:
  AutocovarianceSequence(int n, std::vector<Eigen::MatrixXcd> gammas, double truncation_error);

  int n() const { return n_; }
  int max_lag() const { return static_cast<int>(gammas_.size()) - 1; }
  double truncation_error() const { return truncation_error_; }

  /// Gamma_k for 0 <= k <= max_lag.
  const Eigen::MatrixXcd& gamma(int k) const;

  /// Gamma_k for any |k| <= max_lag, reflecting negative lags.
  Eigen::MatrixXcd gamma_at(int k) const;

 private:
  int n_;
  std::vector<Eigen::MatrixXcd> gammas_;
  double truncation_error_;
};

/// Gamma_k = sum_l G_{l+k} G_l^* over the coefficient window of length L,
/// with a certified truncation error from the symbol tail bounds.
/// pre: K >= 0, L > K.
AutocovarianceSequence autocov(const ProcessModel& m, int K, std::size_t L);

/// Policy default for L: harmonic channels get 1e5 terms (1/L tail bound,
/// Gamma entries accurate to ~1e-5); terminating expansions are exact.
AutocovarianceSequence autocov(const ProcessModel& m, int K);
std::size_t default_autocov_truncation(const ProcessModel& m, int K);

/// Covariance of the stacked estimation window: forward stacks
/// (xi_{-1},...,xi_{-p}) with block (i,j) = Gamma_{j-i}; backward stacks
/// (xi_1,...,xi_p) with block (i,j) = Gamma_{i-j}. Block-Toeplitz, Hermitian PSD.
struct WindowMatrix {
  int n = 0;
  int p = 0;
  Direction direction = Direction::Forward;
  Eigen::MatrixXcd body;
};

WindowMatrix window_matrix(const AutocovarianceSequence& cov, int p, Direction direction);

/// Covariances between xi_0 and the stacked window, as the n x (n p) row of
/// blocks [Gamma_1 .. Gamma_p] (forward) or [Gamma_1^* .. Gamma_p^*] (backward).
Eigen::MatrixXcd cross_blocks(const AutocovarianceSequence& cov, int p, Direction direction);

}  // namespace timearrow
