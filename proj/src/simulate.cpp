#include "timearrow/simulate.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace timearrow {

namespace {

/// Box-Muller on top of the standard-pinned mt19937_64 stream. Uniforms are
/// (x >> 11 + 1/2) * 2^-53, strictly inside (0,1) so the log is safe.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(phi);
    have_spare_ = true;
    return r * std::cos(phi);
  }

 private:
  double uniform() {
    return (double(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

std::size_t default_filter_truncation(const ProcessModel& m) {
  std::size_t L = 1;
  for (const Symbol& s : m.channels) {
    if (s.kind() == SymbolKind::BuiltinHarmonic)
      L = std::max(L, std::size_t(10000));  // tail variance <= 1e-4
    else if (auto deg = s.finite_degree())
      L = std::max(L, *deg + 1);
    else
      L = std::max(L, std::max(s.truncation_default(), std::size_t(4096)));
  }
  return L;
}

}  // namespace

SamplePath sample_path(const ProcessModel& m, Eigen::Index T, std::uint64_t seed,
                       std::size_t L) {
  if (T < 1) raise(errc::invalid_argument, "path length must be at least 1");
  if (L < 1) raise(errc::invalid_argument, "filter truncation must be at least 1");
  if (!m.is_real())
    raise(errc::invalid_argument, "simulation needs a real-coefficient model");

  const auto Li = static_cast<Eigen::Index>(L);
  GaussianStream noise(seed);
  Eigen::VectorXd w(T + 2 * Li);
  for (Eigen::Index t = 0; t < w.size(); ++t) w(t) = noise.next();

  SamplePath path;
  path.n = m.n();
  path.T = T;
  path.seed = seed;
  path.burn_in = Li;
  path.truncation = L;
  path.values.resize(T, m.n());
  for (int c = 0; c < m.n(); ++c) {
    const CoefficientWindow win = m.channels[c].taylor_coefficients(L);
    for (Eigen::Index t = 0; t < T; ++t) {
      double acc = 0.0;
      for (Eigen::Index l = 0; l < Li; ++l)
        acc += win.values[l].real() * w(2 * Li - 1 + t - l);
      path.values(t, c) = acc;
    }
  }
  return path;
}

SamplePath sample_path(const ProcessModel& m, Eigen::Index T, std::uint64_t seed) {
  return sample_path(m, T, seed, default_filter_truncation(m));
}

AutocovarianceSequence empirical_autocov(const SamplePath& path, int K) {
  if (K < 0) raise(errc::invalid_argument, "max lag must be nonnegative");
  if (K >= path.T / 10)
    raise(errc::lag_too_large, "lag " + std::to_string(K) + " needs T > 10 lags, have T = " +
                                   std::to_string(path.T));
  const int n = path.n;
  std::vector<Eigen::MatrixXcd> gammas(K + 1);
  for (int k = 0; k <= K; ++k) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index t = k; t < path.T; ++t)
      acc += path.values.row(t).transpose() * path.values.row(t - k);
    acc /= double(path.T);  // biased normalization keeps the window PSD
    if (k == 0) acc = 0.5 * (acc + acc.transpose().eval());
    gammas[k] = acc.cast<cplx>();
  }
  return AutocovarianceSequence(n, std::move(gammas), 0.0);
}

Eigen::MatrixXd empirical_prediction_error(const SamplePath& path,
                                           const PredictionSolution& sol) {
  const int p = sol.p;
  if (path.T <= 10 * Eigen::Index(p))
    raise(errc::window_exceeds_path, "window " + std::to_string(p) +
                                         " too large for path length " +
                                         std::to_string(path.T));
  const int n = path.n;
  std::vector<Eigen::MatrixXd> coeffs;
  coeffs.reserve(p);
  for (const Eigen::MatrixXcd& a : sol.coeffs) coeffs.push_back(a.real());

  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n, n);
  Eigen::Index count = 0;
  const bool forward = sol.direction == Direction::Forward;
  const Eigen::Index t0 = forward ? p : 0;
  const Eigen::Index t1 = forward ? path.T : path.T - p;
  for (Eigen::Index t = t0; t < t1; ++t) {
    Eigen::VectorXd r = path.values.row(t).transpose();
    for (int j = 1; j <= p; ++j)
      r -= coeffs[j - 1] * path.values.row(forward ? t - j : t + j).transpose();
    acc += r * r.transpose();
    ++count;
  }
  return acc / double(count);
}

}  // namespace timearrow
