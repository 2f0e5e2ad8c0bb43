#pragma once

#include <cstdint>
#include <string>

#include <Eigen/Core>

#include "timearrow/catalog.hpp"
#include "timearrow/covariance.hpp"
#include "timearrow/estimation.hpp"

namespace timearrow {

/// Identifier of the pinned noise recipe: mt19937_64 driving an explicit
/// Box-Muller transform. Recorded so outputs state how their noise was made.
inline constexpr const char* kRngAlgorithm = "mt19937_64+box-muller";

struct SamplePath {
  int n = 0;
  Eigen::Index T = 0;
  Eigen::MatrixXd values;  // T x n
  std::uint64_t seed = 0;
  Eigen::Index burn_in = 0;
  std::size_t truncation = 0;
  std::string rng = kRngAlgorithm;
};

/// Gaussian sample path of a real-coefficient model: T + 2L seeded normal
/// variates convolved with each channel's truncated coefficients, first
/// burn_in = L outputs discarded. Same (model, T, seed, L) => identical path.
SamplePath sample_path(const ProcessModel& m, Eigen::Index T, std::uint64_t seed,
                       std::size_t L);

/// Default truncation: 1e4 for harmonic channels (tail variance <= 1e-4),
/// exact window for terminating expansions.
SamplePath sample_path(const ProcessModel& m, Eigen::Index T, std::uint64_t seed);

/// Biased (1/T-normalized) lag estimates; Gamma_0 symmetrized. pre: K < T/10.
AutocovarianceSequence empirical_autocov(const SamplePath& path, int K);

/// Average residual outer product of the solution's predictor applied across
/// the path, in the solution's direction. pre: T > 10 * window.
Eigen::MatrixXd empirical_prediction_error(const SamplePath& path,
                                           const PredictionSolution& sol);

}  // namespace timearrow
