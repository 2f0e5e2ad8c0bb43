#pragma once

#include <vector>

#include <Eigen/Core>

#include "timearrow/covariance.hpp"

namespace timearrow {

/// Optimal linear one-step estimate of xi_0 from a finite window, together
/// with its error covariance. Forward solutions estimate from the past
/// (xi_{-1}..xi_{-p}), backward ones from the future (xi_1..xi_p).
struct PredictionSolution {
  Direction direction = Direction::Forward;
  int p = 0;
  std::vector<Eigen::MatrixXcd> coeffs;  // A_1..A_p applied to the window, nearest first
  Eigen::MatrixXcd error_covariance;     // Omega, Hermitian PSD
  int rank_used = 0;
  double rank_tolerance = 0.0;
};

inline constexpr double kDefaultRankTol = 1e-10;

/// Cutoff for sweeps that chase near-deterministic decay: the harmonic-model
/// information lives in window-matrix directions far below the general
/// default, and a 1e-10 cutoff would discard it.
inline constexpr double kDeepRankTol = 1e-15;

/// Omega = Gamma_0 - C R^+ C^* with R the window matrix, C the cross blocks
/// and R^+ an eigendecomposition pseudo-inverse that discards eigenvalues
/// below rank_tol * lambda_max. Rank-one spectra make R rank-deficient as p
/// grows; the minimal-norm least-squares solution realizes the minimum error
/// covariance over the window span.
PredictionSolution predict(const AutocovarianceSequence& cov, int p, Direction direction,
                           double rank_tol = kDefaultRankTol);

/// One solution per window, sharing a single autocovariance pass.
std::vector<PredictionSolution> error_sweep(const ProcessModel& m,
                                            const std::vector<int>& windows,
                                            Direction direction,
                                            double rank_tol = kDefaultRankTol);

enum class NumericVerdict { Deterministic, NotDeterministic, Inconclusive };

const char* to_string(NumericVerdict v) noexcept;

/// Backward-trace sweep summary. Deterministic: final trace under the
/// threshold. NotDeterministic: the curve has stabilized above it (relative
/// change below 1e-3 over the last half of the sweep). Inconclusive: still
/// decreasing at the end of the sweep, which is all a finite window can say
/// for the slowly-decaying deterministic examples.
struct DeterminismReport {
  std::vector<int> windows;
  std::vector<double> traces;
  NumericVerdict verdict = NumericVerdict::Inconclusive;
  double threshold = 0.0;
};

/// pre: at least 3 increasing windows.
DeterminismReport is_backward_deterministic_numeric(const ProcessModel& m,
                                                    const std::vector<int>& windows,
                                                    double threshold,
                                                    double rank_tol = kDeepRankTol);

}  // namespace timearrow
