#include "timearrow/catalog.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

namespace timearrow {

bool ProcessModel::is_real() const {
  return std::all_of(channels.begin(), channels.end(),
                     [](const Symbol& s) { return s.is_real(); });
}

nlohmann::json ProcessModel::to_json() const {
  nlohmann::json j;
  j["name"] = name;
  auto arr = nlohmann::json::array();
  for (const Symbol& s : channels) arr.push_back(s.to_json());
  j["channels"] = arr;
  return j;
}

ProcessModel ProcessModel::from_json(const nlohmann::json& j) {
  std::vector<Symbol> channels;
  for (const auto& rec : j.at("channels")) channels.push_back(Symbol::from_json(rec));
  return custom(j.at("name").get<std::string>(), std::move(channels));
}

ProcessModel ma_example(double alpha) {
  if (alpha == 0.0) raise(errc::zero_alpha, "the moving-average example needs alpha != 0");
  ProcessModel m;
  m.name = "ma(alpha=" + std::to_string(alpha) + ")";
  m.channels = {Symbol::rational({1.0, alpha}, {1.0}), Symbol::rational({1.0}, {1.0})};
  return m;
}

ProcessModel harmonic_example() {
  ProcessModel m;
  m.name = "harmonic";
  m.channels = {Symbol::harmonic(), Symbol::rational({1.0}, {1.0})};
  return m;
}

ProcessModel custom(std::string name, std::vector<Symbol> channels) {
  if (channels.empty()) raise(errc::empty_channels, "a model needs at least one channel");
  ProcessModel m;
  m.name = std::move(name);
  m.channels = std::move(channels);
  return m;
}

std::vector<std::string> catalog_names() {
  return {"ma2", "ma05", "harmonic", "scalar-ma", "white", "delay-pair", "mixed"};
}

ProcessModel catalog_lookup(const std::string& name) {
  if (name == "ma2") return ma_example(2.0);
  if (name == "ma05") return ma_example(0.5);
  if (name == "harmonic") return harmonic_example();
  if (name == "scalar-ma") return custom("scalar-ma", {Symbol::rational({1.0, 0.5}, {1.0})});
  if (name == "white") return custom("white", {Symbol::rational({1.0}, {1.0})});
  if (name == "delay-pair")
    return custom("delay-pair",
                  {Symbol::rational({1.0}, {1.0}), Symbol::rational({0.0, 1.0}, {1.0})});
  if (name == "mixed")
    return custom("mixed", {Symbol::harmonic(), Symbol::rational({1.0, 1.0}, {1.0})});
  raise(errc::invalid_argument, "unknown catalog model '" + name + "'");
}

}  // namespace timearrow
