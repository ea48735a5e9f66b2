#include "hankel/corpus.hpp"

#include <cmath>

namespace hankel {

Measure log_carleson_fixture() {
  std::vector<Atom> atoms;
  for (int j = 1; j <= 40; ++j) atoms.push_back({1.0 - std::ldexp(1.0, -j), std::ldexp(1.0, -j) / j});
  return Measure::atomic(std::move(atoms));
}

std::vector<NamedMeasure> measure_corpus() {
  return {
      {"lebesgue", Measure::lebesgue(), "Lebesgue measure on [0,1)"},
      {"logcarleson", log_carleson_fixture(), "atoms 1-2^-j with masses 2^-j/j, j=1..40"},
      {"sqrt", Measure::density(-0.5, 0.0), "(1-t)^(-1/2) dt"},
      {"pow05", Measure::density(0.5, 0.0), "(1-t)^(1/2) dt"},
      {"pow1", Measure::density(1.0, 0.0), "(1-t) dt"},
      {"loglebesgue", Measure::density(0.0, -1.0), "(log 2/(1-t))^-1 dt"},
  };
}

std::vector<NamedMeasure> named_measures() {
  auto all = measure_corpus();
  all.push_back({"halflog", Measure::density(0.0, -0.5), "(log 2/(1-t))^(-1/2) dt"});
  return all;
}

std::optional<Measure> find_named_measure(const std::string& name) {
  for (auto& m : named_measures())
    if (m.name == name) return m.measure;
  return std::nullopt;
}

Classification classify_measure(const Measure& m, int J, const TraceThresholds& th) {
  const auto grid = dyadic_grid(J);
  Classification c;
  c.carleson = carleson_constant(m, 1.0, grid);
  c.log_carleson = log_carleson_constant(m, 1.0, 1.0, grid);
  c.carleson_verdict = classify_trace(c.carleson.values, th);
  c.log_verdict = classify_trace(c.log_carleson.values, th);
  return c;
}

std::vector<Experiment> experiments() {
  std::vector<Experiment> out;
  for (const auto& nm : named_measures()) {
    auto add = [&](std::string prefix, std::string what, SpaceSpec dom, SpaceSpec cod, FamilySpec fam,
                   NormRoute out_route = NormRoute::Series, int jmax = 14) {
      ProbeSpec s;
      s.measure = nm.measure;
      s.domain = dom;
      s.codomain = cod;
      s.family = fam;
      s.b_grid = dyadic_b_grid(2, jmax);
      s.output_route = out_route;
      // Quadrature outputs cost O(K log K) per radial node, so those probes stop earlier
      // and refine angular sums to a looser tolerance.
      if (out_route == NormRoute::Quadrature) s.quadrature.refinement_tolerance = 1e-4;
      out.push_back({prefix + "-" + nm.name, what + " for " + nm.description, s});
    };
    add("h1-d10", "H^1 -> D^1_0 with the H^1 family", SpaceSpec::hardy(1), SpaceSpec::dirichlet(1, 0),
        FamilySpec::h1());
    add("d10-d10", "D^1_0 -> D^1_0 with the H^1 family", SpaceSpec::dirichlet(1, 0), SpaceSpec::dirichlet(1, 0),
        FamilySpec::h1());
    add("bergman-p4a1", "A^4_1 -> A^4_1", SpaceSpec::bergman(4, 1), SpaceSpec::bergman(4, 1),
        FamilySpec::bergman(4, 1));
    add("dirichlet-p2a05", "D^2_0.5 -> D^2_0.5", SpaceSpec::dirichlet(2, 0.5), SpaceSpec::dirichlet(2, 0.5),
        FamilySpec::dirichlet(2, 0.5));
    add("dirichlet-p2a1", "D^2_1 -> D^2_1", SpaceSpec::dirichlet(2, 1), SpaceSpec::dirichlet(2, 1),
        FamilySpec::dirichlet(2, 1));
    add("d1-am05", "D^1_-0.5 -> D^1_-0.5 (quadrature output)", SpaceSpec::dirichlet(1, -0.5),
        SpaceSpec::dirichlet(1, -0.5), FamilySpec::dirichlet(1, -0.5), NormRoute::Quadrature, 8);
    add("alphalog-a05", "H^1 -> D^1(log^-0.5) (quadrature output)", SpaceSpec::hardy(1),
        SpaceSpec::log_dirichlet1(-0.5), FamilySpec::h1(), NormRoute::Quadrature, 8);
  }
  return out;
}

std::optional<Experiment> find_experiment(const std::string& name) {
  for (auto& e : experiments())
    if (e.name == name) return e;
  return std::nullopt;
}

}  // namespace hankel
