#include "timearrow/symbols.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <nlohmann/json.hpp>

namespace timearrow {

namespace {

constexpr double kPoleTolerance = 1e-9;

bool all_zero(const std::vector<cplx>& v) {
  return std::all_of(v.begin(), v.end(), [](cplx c) { return c == cplx(0.0); });
}

std::vector<cplx> trim_trailing_zeros(std::vector<cplx> v) {
  while (v.size() > 1 && v.back() == cplx(0.0)) v.pop_back();
  return v;
}

/// Roots of a polynomial with constant term first, via the companion matrix.
std::vector<cplx> polynomial_roots(const std::vector<cplx>& poly) {
  const std::size_t deg = poly.size() - 1;
  if (deg == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) companion(i, deg - 1) = -poly[i] / poly[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
  std::vector<cplx> roots(deg);
  for (std::size_t i = 0; i < deg; ++i) roots[i] = solver.eigenvalues()(i);
  return roots;
}

cplx horner(const std::vector<cplx>& poly, cplx z) {
  cplx acc = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// Division recurrence c_l = (n_l - sum_j d_j c_{l-j}) / d_0.
std::vector<cplx> rational_coefficients(const std::vector<cplx>& num,
                                        const std::vector<cplx>& den, std::size_t L) {
  std::vector<cplx> c(L, 0.0);
  for (std::size_t l = 0; l < L; ++l) {
    cplx acc = l < num.size() ? num[l] : cplx(0.0);
    const std::size_t jmax = std::min(l, den.size() - 1);
    for (std::size_t j = 1; j <= jmax; ++j) acc -= den[j] * c[l - j];
    c[l] = acc / den[0];
  }
  return c;
}

}  // namespace

Symbol Symbol::rational(std::vector<cplx> num, std::vector<cplx> den) {
  if (num.empty() || all_zero(num)) raise(errc::empty_numerator, "numerator has no nonzero entry");
  if (den.empty() || all_zero(den)) raise(errc::invalid_argument, "denominator is zero");
  den = trim_trailing_zeros(std::move(den));

  double min_radius = std::numeric_limits<double>::infinity();
  for (cplx root : polynomial_roots(den)) {
    min_radius = std::min(min_radius, std::abs(root));
    if (std::abs(root) <= 1.0 + kPoleTolerance)
      raise(errc::pole_in_disk, "denominator root of modulus " + std::to_string(std::abs(root)) +
                                    " inside the closed unit disk");
  }

  Symbol s;
  s.kind_ = SymbolKind::Rational;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.min_pole_radius_ = min_radius;
  s.truncation_default_ = s.den_.size() > 1 ? 1024 : s.num_.size();
  return s;
}

Symbol Symbol::harmonic() {
  Symbol s;
  s.kind_ = SymbolKind::BuiltinHarmonic;
  s.truncation_default_ = 4096;  // tail_bound 1/4096 <= 2.5e-4 in squared norm
  return s;
}

Symbol Symbol::explicit_coeffs(std::vector<cplx> coeffs) {
  if (coeffs.empty() || all_zero(coeffs))
    raise(errc::invalid_argument, "explicit coefficient sequence needs a nonzero entry");
  Symbol s;
  s.kind_ = SymbolKind::ExplicitCoefficients;
  s.coeffs_ = std::move(coeffs);
  s.truncation_default_ = s.coeffs_.size();
  return s;
}

std::optional<std::size_t> Symbol::finite_degree() const {
  const std::vector<cplx>* seq = nullptr;
  switch (kind_) {
    case SymbolKind::BuiltinHarmonic:
      return std::nullopt;
    case SymbolKind::Rational:
      if (den_.size() > 1) return std::nullopt;
      seq = &num_;
      break;
    case SymbolKind::ExplicitCoefficients:
      seq = &coeffs_;
      break;
  }
  std::size_t deg = 0;
  for (std::size_t l = 0; l < seq->size(); ++l)
    if ((*seq)[l] != cplx(0.0)) deg = l;
  return deg;
}

bool Symbol::is_real() const {
  auto real_seq = [](const std::vector<cplx>& v) {
    return std::all_of(v.begin(), v.end(), [](cplx c) { return c.imag() == 0.0; });
  };
  return real_seq(num_) && real_seq(den_) && real_seq(coeffs_);
}

CoefficientWindow Symbol::taylor_coefficients(std::size_t L) const {
  if (L == 0) raise(errc::invalid_argument, "window length must be at least 1");
  CoefficientWindow w;
  switch (kind_) {
    case SymbolKind::BuiltinHarmonic: {
      w.values.resize(L);
      for (std::size_t l = 0; l < L; ++l) w.values[l] = 1.0 / double(1 + l);
      // sum_{l>=L} 1/(1+l)^2 <= integral_{L}^{inf} dx/x^2 = 1/L
      w.tail_bound = 1.0 / double(L);
      break;
    }
    case SymbolKind::ExplicitCoefficients: {
      w.values.assign(L, 0.0);
      std::copy_n(coeffs_.begin(), std::min(L, coeffs_.size()), w.values.begin());
      double tail = 0.0;
      for (std::size_t l = L; l < coeffs_.size(); ++l) tail += std::norm(coeffs_[l]);
      w.tail_bound = tail;
      break;
    }
    case SymbolKind::Rational: {
      if (den_.size() == 1) {
        // Polynomial: exact window, tail is the dropped part of the numerator.
        w.values.assign(L, 0.0);
        for (std::size_t l = 0; l < std::min(L, num_.size()); ++l) w.values[l] = num_[l] / den_[0];
        double tail = 0.0;
        for (std::size_t l = L; l < num_.size(); ++l) tail += std::norm(num_[l] / den_[0]);
        w.tail_bound = tail;
        break;
      }
      // Geometric tail bound from the pole radii: coefficients decay like r0^l
      // with r0 = 1/min|pole| < 1 (times a polynomial when poles repeat), so
      // |c_l| <= C r^l holds for r = sqrt(r0) with C read off a probe window.
      const double r = std::sqrt(1.0 / min_pole_radius_);
      const std::size_t probe = std::max({L, 8 * den_.size(), std::size_t(64)});
      std::vector<cplx> c = rational_coefficients(num_, den_, probe);
      double C = 0.0, rpow = 1.0;
      for (std::size_t l = 0; l < probe; ++l) {
        C = std::max(C, std::abs(c[l]) / rpow);
        rpow *= r;
      }
      w.values.assign(c.begin(), c.begin() + L);
      w.tail_bound = C * C * std::pow(r, 2.0 * double(L)) / (1.0 - r * r);
      break;
    }
  }
  return w;
}

cplx Symbol::evaluate_on_circle(double theta) const {
  const cplx z = std::polar(1.0, theta);
  switch (kind_) {
    case SymbolKind::Rational:
      return horner(num_, z) / horner(den_, z);
    case SymbolKind::ExplicitCoefficients:
      return horner(coeffs_, z);
    case SymbolKind::BuiltinHarmonic:
      // sum_l z^l/(1+l) = -log(1-z)/z; diverges at z=1 (returns +inf there).
      return -std::log(cplx(1.0) - z) / z;
  }
  return 0.0;  // unreachable
}

CoefficientWindow backward_shift(const CoefficientWindow& w, std::size_t k) {
  CoefficientWindow out;
  out.tail_bound = w.tail_bound;
  if (k < w.values.size()) out.values.assign(w.values.begin() + k, w.values.end());
  return out;
}

namespace {

nlohmann::json encode_cplx(cplx c) {
  if (c.imag() == 0.0) return c.real();
  return nlohmann::json::array({c.real(), c.imag()});
}

nlohmann::json encode_seq(const std::vector<cplx>& v) {
  auto arr = nlohmann::json::array();
  for (cplx c : v) arr.push_back(encode_cplx(c));
  return arr;
}

cplx decode_cplx(const nlohmann::json& j) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2) return cplx(j[0].get<double>(), j[1].get<double>());
  raise(errc::invalid_argument, "coefficient must be a number or an [re, im] pair");
}

std::vector<cplx> decode_seq(const nlohmann::json& j) {
  std::vector<cplx> v;
  for (const auto& e : j) v.push_back(decode_cplx(e));
  return v;
}

}  // namespace

nlohmann::json Symbol::to_json() const {
  nlohmann::json j;
  switch (kind_) {
    case SymbolKind::Rational:
      j["kind"] = "rational";
      j["num"] = encode_seq(num_);
      j["den"] = encode_seq(den_);
      break;
    case SymbolKind::BuiltinHarmonic:
      j["kind"] = "harmonic";
      break;
    case SymbolKind::ExplicitCoefficients:
      j["kind"] = "explicit";
      j["coeffs"] = encode_seq(coeffs_);
      break;
  }
  return j;
}

Symbol Symbol::from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") return rational(decode_seq(j.at("num")), decode_seq(j.at("den")));
  if (kind == "harmonic") return harmonic();
  if (kind == "explicit") return explicit_coeffs(decode_seq(j.at("coeffs")));
  raise(errc::invalid_argument, "unknown symbol kind '" + kind + "'");
}

const char* to_string(errc code) noexcept {
  switch (code) {
    case errc::pole_in_disk: return "PoleInDisk";
    case errc::empty_numerator: return "EmptyNumerator";
    case errc::zero_alpha: return "ZeroAlpha";
    case errc::empty_channels: return "EmptyChannels";
    case errc::negative_density: return "NegativeDensity";
    case errc::truncation_too_short: return "TruncationTooShort";
    case errc::lag_unavailable: return "LagUnavailable";
    case errc::window_exceeds_lags: return "WindowExceedsLags";
    case errc::degenerate_gamma0: return "DegenerateGamma0";
    case errc::empty_labels: return "EmptyLabels";
    case errc::lag_too_large: return "LagTooLarge";
    case errc::window_exceeds_path: return "WindowExceedsPath";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace timearrow
