#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "timearrow/symbols.hpp"

namespace timearrow {

enum class Cyclicity { Cyclic, NonCyclic, Unknown };
enum class Evidence { RationalPseudocontinuation, BuiltinKnownCyclic, ResidualProbe, None };
enum class RuleVerdict { Deterministic, NotDeterministic, Unknown };

const char* to_string(Cyclicity c) noexcept;
const char* to_string(Evidence e) noexcept;
const char* to_string(RuleVerdict v) noexcept;

struct CyclicityLabel {
  Cyclicity label = Cyclicity::Unknown;
  Evidence evidence = Evidence::None;
  std::optional<std::vector<double>> probe_data;
};

/// Rational symbols (and finite explicit sequences, which are polynomials)
/// carry a meromorphic pseudocontinuation and are never cyclic for the
/// backward shift; the built-in harmonic symbol is a known cyclic vector.
CyclicityLabel classify(const Symbol& s);

struct DeterminismRuleVerdict {
  RuleVerdict verdict = RuleVerdict::Unknown;
  std::string rule_fired;
};

/// Two-generator rule: one cyclic and one non-cyclic generator make the pair
/// backward deterministic; two non-cyclic generators never do (their
/// unimodular ratios stay inside the inner-quotient class, which is closed
/// under products and inverses). Anything else is undecidable at the label
/// level and is referred to the numerical sweep.
DeterminismRuleVerdict pair_rule(const CyclicityLabel& lg, const CyclicityLabel& lh);

/// n-generator rule with channel 1 distinguished: deterministic as soon as
/// pair_rule fires Deterministic against some later channel; not
/// deterministic when every label is NonCyclic. A lone cyclic generator is
/// deterministic by itself; a lone non-cyclic one is not.
DeterminismRuleVerdict multi_rule(const std::vector<CyclicityLabel>& labels);

/// Entries M[j][k] = 1/(j+k+1), zero-based.
Eigen::MatrixXd hilbert_matrix(int N);

/// Distance (in coefficient norm, truncated at N) from the target to the
/// span of {U^*k g : k <= j}, for j = 0..max_shifts. Non-increasing.
/// pre: N >= max_shifts + target length.
std::vector<double> residual_probe(const Symbol& g, const CoefficientWindow& target,
                                   int max_shifts, int truncation);

/// Default truncation 4 * (max_shifts + target length).
std::vector<double> residual_probe(const Symbol& g, const CoefficientWindow& target,
                                   int max_shifts);

}  // namespace timearrow
