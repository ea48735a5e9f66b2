#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankel/probes.hpp"
#include "json.hpp"

namespace hankel::cli {

// Probe settings from a --config file and command-line flags. Unset fields fall back to
// the named experiment, then to library defaults.
struct ProbeConfig {
  std::optional<std::string> experiment, measure, domain, codomain, family;
  std::optional<int> bmin_exp, bmax_exp;
  std::optional<std::vector<double>> b_grid;  // explicit grid, overrides the exponents
  std::optional<std::string> input_route, output_route;
  std::optional<double> truncation_factor, output_factor;
  std::optional<unsigned> threads;
  std::optional<std::string> out, format;
  nlohmann::ordered_json quadrature = nlohmann::ordered_json::object();
  nlohmann::ordered_json thresholds = nlohmann::ordered_json::object();

  // Throws ArgumentError listing every unknown or ill-typed key.
  static ProbeConfig from_json(const nlohmann::ordered_json& j);
  static ProbeConfig load(const std::string& path);

  // Fields set in `o` win.
  void merge(const ProbeConfig& o);
};

struct ResolvedProbe {
  std::string experiment;
  ProbeSpec spec;
  nlohmann::ordered_json config;      // full effective configuration
  nlohmann::ordered_json thresholds;
};

ResolvedProbe resolve(const ProbeConfig& c);

std::string family_literal(const FamilySpec& f);
FamilySpec parse_family(const std::string& text);

}  // namespace hankel::cli
