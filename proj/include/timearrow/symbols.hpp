#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "timearrow/error.hpp"

namespace timearrow {

using cplx = std::complex<double>;

enum class SymbolKind { Rational, BuiltinHarmonic, ExplicitCoefficients };

/// A finite slice of a power-series coefficient sequence together with a
/// bound on the squared l2-norm of everything that was cut off.
struct CoefficientWindow {
  std::vector<cplx> values;
  double tail_bound = 0.0;

  std::size_t size() const { return values.size(); }
};

/// Scalar generating function g(z) = sum_l c_l z^l, analytic and
/// square-summable on the unit disk. Multiplication by z is the unit delay,
/// so causal filters are one-sided expansions in nonnegative powers.
/// Immutable after construction.
class Symbol {
 public:
  /// num/den polynomial coefficients, constant term first. The denominator
  /// must have no roots with modulus <= 1 + 1e-9.
  static Symbol rational(std::vector<cplx> num, std::vector<cplx> den);

  /// g(z) = sum_l z^l / (1 + l); square-summable, boundary-singular at z=1.
  static Symbol harmonic();

  /// Finite coefficient sequence, at least one nonzero entry.
  static Symbol explicit_coeffs(std::vector<cplx> coeffs);

  SymbolKind kind() const { return kind_; }
  const std::vector<cplx>& numerator() const { return num_; }
  const std::vector<cplx>& denominator() const { return den_; }
  const std::vector<cplx>& coefficients() const { return coeffs_; }

  /// Window length used when an operation needs coefficients and the caller
  /// did not pass an explicit cut.
  std::size_t truncation_default() const { return truncation_default_; }

  /// Degree of the coefficient sequence when it terminates (polynomials and
  /// explicit sequences); empty for symbols with infinite expansions.
  std::optional<std::size_t> finite_degree() const;

  /// True when every defining coefficient is real.
  bool is_real() const;

  /// First L power-series coefficients plus a valid tail bound.
  CoefficientWindow taylor_coefficients(std::size_t L) const;

  /// Boundary value at z = e^{i theta}.
  cplx evaluate_on_circle(double theta) const;

  nlohmann::json to_json() const;
  static Symbol from_json(const nlohmann::json& j);

  bool operator==(const Symbol&) const = default;

 private:
  Symbol() = default;

  SymbolKind kind_ = SymbolKind::ExplicitCoefficients;
  std::vector<cplx> num_;     // Rational only
  std::vector<cplx> den_;     // Rational only
  std::vector<cplx> coeffs_;  // ExplicitCoefficients only
  std::size_t truncation_default_ = 1;
  double min_pole_radius_ = 0.0;  // Rational with nontrivial denominator
};

/// U^*k: drops the first k coefficients. The window shrinks to
/// max(L - k, 0) values; the tail bound still covers the same dropped tail.
CoefficientWindow backward_shift(const CoefficientWindow& w, std::size_t k);

}  // namespace timearrow
