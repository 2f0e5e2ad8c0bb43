#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "timearrow/symbols.hpp"

namespace timearrow {

/// Rank-one n-variate stationary process: n scalar filters driven by one
/// scalar unit-variance white noise.
struct ProcessModel {
  std::string name;
  std::vector<Symbol> channels;
  double noise_variance = 1.0;  // fixed at 1, matching the unit-variance convention

  int n() const { return static_cast<int>(channels.size()); }
  bool is_real() const;

  nlohmann::json to_json() const;
  static ProcessModel from_json(const nlohmann::json& j);
};

/// Bivariate moving-average model: channels 1 + alpha z and 1.
ProcessModel ma_example(double alpha);

/// Bivariate model with the harmonic-series filter on the first channel and
/// the identity filter on the second.
ProcessModel harmonic_example();

ProcessModel custom(std::string name, std::vector<Symbol> channels);

/// Named ready-made models.
std::vector<std::string> catalog_names();
ProcessModel catalog_lookup(const std::string& name);

}  // namespace timearrow
