#include "timearrow/cyclicity.hpp"

#include <algorithm>
#include <cmath>

namespace timearrow {

const char* to_string(Cyclicity c) noexcept {
  switch (c) {
    case Cyclicity::Cyclic: return "Cyclic";
    case Cyclicity::NonCyclic: return "NonCyclic";
    case Cyclicity::Unknown: return "Unknown";
  }
  return "?";
}

const char* to_string(Evidence e) noexcept {
  switch (e) {
    case Evidence::RationalPseudocontinuation: return "RationalPseudocontinuation";
    case Evidence::BuiltinKnownCyclic: return "BuiltinKnownCyclic";
    case Evidence::ResidualProbe: return "ResidualProbe";
    case Evidence::None: return "None";
  }
  return "?";
}

const char* to_string(RuleVerdict v) noexcept {
  switch (v) {
    case RuleVerdict::Deterministic: return "Deterministic";
    case RuleVerdict::NotDeterministic: return "NotDeterministic";
    case RuleVerdict::Unknown: return "Unknown";
  }
  return "?";
}

CyclicityLabel classify(const Symbol& s) {
  switch (s.kind()) {
    case SymbolKind::Rational:
      return {Cyclicity::NonCyclic, Evidence::RationalPseudocontinuation, std::nullopt};
    case SymbolKind::BuiltinHarmonic:
      return {Cyclicity::Cyclic, Evidence::BuiltinKnownCyclic, std::nullopt};
    case SymbolKind::ExplicitCoefficients:
      // Finite sequences are polynomials, hence rational.
      return {Cyclicity::NonCyclic, Evidence::RationalPseudocontinuation, std::nullopt};
  }
  return {Cyclicity::Unknown, Evidence::None, std::nullopt};
}

DeterminismRuleVerdict pair_rule(const CyclicityLabel& lg, const CyclicityLabel& lh) {
  const Cyclicity a = lg.label, b = lh.label;
  if ((a == Cyclicity::Cyclic && b == Cyclicity::NonCyclic) ||
      (a == Cyclicity::NonCyclic && b == Cyclicity::Cyclic))
    return {RuleVerdict::Deterministic, "cyclic paired with non-cyclic"};
  if (a == Cyclicity::NonCyclic && b == Cyclicity::NonCyclic)
    return {RuleVerdict::NotDeterministic, "both non-cyclic: ratio stays an inner quotient"};
  return {RuleVerdict::Unknown, "undecidable at the label level; use the numerical sweep"};
}

DeterminismRuleVerdict multi_rule(const std::vector<CyclicityLabel>& labels) {
  if (labels.empty()) raise(errc::empty_labels, "no channel labels");
  if (labels.size() == 1) {
    switch (labels[0].label) {
      case Cyclicity::Cyclic:
        return {RuleVerdict::Deterministic, "single cyclic generator spans a dense orbit"};
      case Cyclicity::NonCyclic:
        return {RuleVerdict::NotDeterministic, "single non-cyclic generator"};
      case Cyclicity::Unknown:
        return {RuleVerdict::Unknown, "unlabeled generator; use the numerical sweep"};
    }
  }
  for (std::size_t j = 1; j < labels.size(); ++j) {
    const DeterminismRuleVerdict v = pair_rule(labels[0], labels[j]);
    if (v.verdict == RuleVerdict::Deterministic)
      return {RuleVerdict::Deterministic,
              "channel 1 vs channel " + std::to_string(j + 1) + ": " + v.rule_fired};
  }
  if (std::all_of(labels.begin(), labels.end(),
                  [](const CyclicityLabel& l) { return l.label == Cyclicity::NonCyclic; }))
    return {RuleVerdict::NotDeterministic, "all generators non-cyclic"};
  return {RuleVerdict::Unknown, "undecidable at the label level; use the numerical sweep"};
}

Eigen::MatrixXd hilbert_matrix(int N) {
  if (N < 1) raise(errc::invalid_argument, "N must be positive");
  Eigen::MatrixXd h(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) h(j, k) = 1.0 / double(j + k + 1);
  return h;
}

std::vector<double> residual_probe(const Symbol& g, const CoefficientWindow& target,
                                   int max_shifts, int truncation) {
  if (max_shifts < 0) raise(errc::invalid_argument, "max shifts must be nonnegative");
  const int N = truncation;
  if (N < max_shifts + static_cast<int>(target.size()))
    raise(errc::truncation_too_short,
          "truncation " + std::to_string(N) + " below shifts + target length");

  // Coefficients far enough out to fill every shifted window of length N.
  const CoefficientWindow base = g.taylor_coefficients(std::size_t(N + max_shifts));

  Eigen::VectorXcd residual = Eigen::VectorXcd::Zero(N);
  for (std::size_t i = 0; i < target.size(); ++i) residual(i) = target.values[i];

  // Incremental Gram-Schmidt with re-orthogonalization; each accepted basis
  // vector strips its component from the target residual.
  std::vector<Eigen::VectorXcd> basis;
  std::vector<double> curve;
  curve.reserve(max_shifts + 1);
  for (int k = 0; k <= max_shifts; ++k) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(N);
    for (int i = 0; i < N; ++i) v(i) = base.values[k + i];
    const double original_norm = v.norm();
    for (int pass = 0; pass < 2; ++pass)
      for (const Eigen::VectorXcd& q : basis) v -= q * q.dot(v);
    if (v.norm() > 1e-12 * std::max(original_norm, 1e-300)) {
      v.normalize();
      residual -= v * v.dot(residual);
      basis.push_back(std::move(v));
    }
    curve.push_back(residual.norm());
  }
  return curve;
}

std::vector<double> residual_probe(const Symbol& g, const CoefficientWindow& target,
                                   int max_shifts) {
  return residual_probe(g, target, max_shifts,
                        4 * (max_shifts + static_cast<int>(target.size())));
}

}  // namespace timearrow
