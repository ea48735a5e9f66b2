#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hankel/measure.hpp"
#include "hankel/probes.hpp"

namespace hankel {

struct NamedMeasure {
  std::string name;
  Measure measure;
  std::string description;
};

/// Atoms at t_j = 1 - 2^{-j} with masses 2^{-j}/j, j = 1..40. Its tail behaves like
/// (1-t)/log(1/(1-t)), so it is 1-logarithmic 1-Carleson.
Measure log_carleson_fixture();

/// Fixture measures used by the dichotomy probes: lebesgue, logcarleson, sqrt
/// (γ = -1/2), pow05 (γ = 1/2), pow1 (γ = 1), loglebesgue (γ = 0, δ = -1).
std::vector<NamedMeasure> measure_corpus();

/// Corpus members plus extra named fixtures (halflog: γ = 0, δ = -1/2).
std::vector<NamedMeasure> named_measures();
std::optional<Measure> find_named_measure(const std::string& name);

struct Classification {
  CarlesonTrace carleson;      // s = 1, α = 0
  CarlesonTrace log_carleson;  // s = 1, α = 1
  TraceVerdict carleson_verdict;
  TraceVerdict log_verdict;
};

/// Empirical Carleson and 1-logarithmic Carleson verdicts on the dyadic grid j = 0..J.
Classification classify_measure(const Measure& m, int J = 20, const TraceThresholds& th = {});

struct Experiment {
  std::string name;
  std::string description;
  ProbeSpec spec;
};

/// Named probe experiments: h1-d10-<m>, d10-d10-<m>, bergman-p4a1-<m>, dirichlet-p2a05-<m>,
/// dirichlet-p2a1-<m>, d1-am05-<m> and alphalog-a05-<m> for every named measure <m>.
std::vector<Experiment> experiments();
std::optional<Experiment> find_experiment(const std::string& name);

}  // namespace hankel
