#include "probe_config.hpp"

#include <cmath>
#include <fstream>

#include "hankel/corpus.hpp"
#include "hankel/errors.hpp"
#include "hankel/literals.hpp"
#include "hankel/version.hpp"

namespace hankel::cli {

using nlohmann::ordered_json;

namespace {

template <class T>
void take(const ordered_json& j, const char* key, std::optional<T>& dst, std::vector<std::string>& bad) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return;
  try {
    dst = it->template get<T>();
  } catch (const nlohmann::json::exception&) {
    bad.push_back(std::string(key) + " (wrong type)");
  }
}

void check_keys(const ordered_json& j, std::initializer_list<const char*> allowed, const std::string& prefix,
                std::vector<std::string>& bad) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || it.key() == a;
    if (!ok) bad.push_back(prefix + it.key() + " (unknown key)");
  }
}

NormRoute parse_route(const std::string& s) {
  if (s == "series" || s == "coefficient") return NormRoute::Series;
  if (s == "quadrature") return NormRoute::Quadrature;
  throw ArgumentError("unknown norm route '" + s + "' (expected series or quadrature)");
}

FamilySpec default_family(const SpaceSpec& d) {
  if (d.kind == SpaceKind::Bergman) return FamilySpec::bergman(d.p, d.alpha);
  if (d.kind == SpaceKind::Dirichlet && !(d.p == 1.0 && d.alpha == 0.0)) return FamilySpec::dirichlet(d.p, d.alpha);
  return FamilySpec::h1();
}

}  // namespace

std::string family_literal(const FamilySpec& f) {
  switch (f.kind) {
    case FamilyKind::H1:
      return "h1";
    case FamilyKind::Bergman:
      return to_literal(SpaceSpec::bergman(f.p, f.alpha));
    case FamilyKind::Dirichlet:
      return to_literal(SpaceSpec::dirichlet(f.p, f.alpha));
  }
  return "h1";
}

FamilySpec parse_family(const std::string& text) {
  if (text == "h1") return FamilySpec::h1();
  const SpaceSpec s = parse_space(text);
  if (s.kind == SpaceKind::Bergman) return FamilySpec::bergman(s.p, s.alpha);
  if (s.kind == SpaceKind::Dirichlet) return FamilySpec::dirichlet(s.p, s.alpha);
  throw ArgumentError("family must be h1, bergman:p=..,alpha=.. or dirichlet:p=..,alpha=..");
}

ProbeConfig ProbeConfig::from_json(const ordered_json& j) {
  if (!j.is_object()) throw ArgumentError("config: top level must be an object");
  std::vector<std::string> bad;
  check_keys(j,
             {"experiment", "measure", "domain", "codomain", "family", "bmin_exp", "bmax_exp", "b_grid", "input_route",
              "output_route", "truncation_factor", "output_factor", "threads", "out", "format", "quadrature",
              "thresholds", "library_version"},
             "", bad);
  ProbeConfig c;
  take(j, "experiment", c.experiment, bad);
  take(j, "measure", c.measure, bad);
  take(j, "domain", c.domain, bad);
  take(j, "codomain", c.codomain, bad);
  take(j, "family", c.family, bad);
  take(j, "bmin_exp", c.bmin_exp, bad);
  take(j, "bmax_exp", c.bmax_exp, bad);
  take(j, "b_grid", c.b_grid, bad);
  take(j, "input_route", c.input_route, bad);
  take(j, "output_route", c.output_route, bad);
  take(j, "truncation_factor", c.truncation_factor, bad);
  take(j, "output_factor", c.output_factor, bad);
  take(j, "threads", c.threads, bad);
  take(j, "out", c.out, bad);
  take(j, "format", c.format, bad);
  if (auto it = j.find("quadrature"); it != j.end()) {
    if (!it->is_object()) bad.push_back("quadrature (wrong type)");
    else {
      check_keys(*it,
                 {"radial_shells", "nodes_per_shell", "angular_factor", "fractional_angular_factor",
                  "refinement_tolerance", "max_angular_points"},
                 "quadrature.", bad);
      c.quadrature = *it;
    }
  }
  if (auto it = j.find("thresholds"); it != j.end()) {
    if (!it->is_object()) bad.push_back("thresholds (wrong type)");
    else {
      check_keys(*it, {"bounded_exponent", "power_exponent", "max_spread", "window"}, "thresholds.", bad);
      c.thresholds = *it;
    }
  }
  if (!bad.empty()) {
    std::string msg = "config: invalid keys:";
    for (const auto& b : bad) msg += "\n  " + b;
    throw ArgumentError(msg);
  }
  return c;
}

ProbeConfig ProbeConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot read config file '" + path + "'");
  ordered_json j;
  try {
    j = ordered_json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("config: ") + e.what(), e.byte);
  }
  return from_json(j);
}

void ProbeConfig::merge(const ProbeConfig& o) {
  auto over = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  over(experiment, o.experiment);
  over(measure, o.measure);
  over(domain, o.domain);
  over(codomain, o.codomain);
  over(family, o.family);
  over(bmin_exp, o.bmin_exp);
  over(bmax_exp, o.bmax_exp);
  over(b_grid, o.b_grid);
  if (o.bmin_exp || o.bmax_exp) b_grid = o.b_grid;
  over(input_route, o.input_route);
  over(output_route, o.output_route);
  over(truncation_factor, o.truncation_factor);
  over(output_factor, o.output_factor);
  over(threads, o.threads);
  over(out, o.out);
  over(format, o.format);
  for (auto& [k, v] : o.quadrature.items()) quadrature[k] = v;
  for (auto& [k, v] : o.thresholds.items()) thresholds[k] = v;
}

ResolvedProbe resolve(const ProbeConfig& c) {
  ResolvedProbe r;
  ProbeSpec& s = r.spec;
  int bmin = 2, bmax = 14;
  if (c.experiment && *c.experiment != "custom") {
    const auto e = find_experiment(*c.experiment);
    if (!e) throw ArgumentError("unknown experiment '" + *c.experiment + "'");
    r.experiment = e->name;
    s = e->spec;
    bmin = static_cast<int>(std::lround(-std::log2(1.0 - s.b_grid.front())));
    bmax = static_cast<int>(std::lround(-std::log2(1.0 - s.b_grid.back())));
  } else {
    if (!c.domain) throw ArgumentError("probe: give --experiment or at least --space");
    r.experiment = "custom";
  }
  if (c.measure) {
    if (const auto named = find_named_measure(*c.measure))
      s.measure = *named;
    else
      s.measure = parse_measure(*c.measure);
  }
  if (c.domain) {
    s.domain = parse_space(*c.domain);
    if (!c.codomain) s.codomain = s.domain;
    if (!c.family) s.family = default_family(s.domain);
  }
  if (c.codomain) s.codomain = parse_space(*c.codomain);
  if (c.family) s.family = parse_family(*c.family);
  if (c.bmin_exp) bmin = *c.bmin_exp;
  if (c.bmax_exp) bmax = *c.bmax_exp;
  bool custom_grid = false;
  if (c.b_grid && !c.b_grid->empty()) {
    s.b_grid = *c.b_grid;
    // An explicit grid that happens to be dyadic is reported by its exponents.
    const auto j = [](double b) { return static_cast<int>(std::lround(-std::log2(1.0 - b))); };
    bmin = j(s.b_grid.front());
    bmax = j(s.b_grid.back());
    custom_grid = !(bmin >= 2 && bmax >= bmin && bmax <= 40 && s.b_grid == dyadic_b_grid(bmin, bmax));
  } else {
    s.b_grid = dyadic_b_grid(bmin, bmax);
  }
  if (c.input_route) s.input_route = parse_route(*c.input_route);
  if (c.output_route) s.output_route = parse_route(*c.output_route);
  if (c.truncation_factor) s.truncation_factor = *c.truncation_factor;
  if (c.output_factor) s.output_factor = *c.output_factor;
  if (c.threads) s.threads = *c.threads;

  try {
    auto& q = s.quadrature;
    const auto& jq = c.quadrature;
    q.radial_shells = jq.value("radial_shells", q.radial_shells);
    q.nodes_per_shell = jq.value("nodes_per_shell", q.nodes_per_shell);
    q.angular_factor = jq.value("angular_factor", q.angular_factor);
    q.fractional_angular_factor = jq.value("fractional_angular_factor", q.fractional_angular_factor);
    q.refinement_tolerance = jq.value("refinement_tolerance", q.refinement_tolerance);
    q.max_angular_points = jq.value("max_angular_points", q.max_angular_points);
    auto& t = s.thresholds;
    const auto& jt = c.thresholds;
    t.bounded_exponent = jt.value("bounded_exponent", t.bounded_exponent);
    t.power_exponent = jt.value("power_exponent", t.power_exponent);
    t.max_spread = jt.value("max_spread", t.max_spread);
    t.window = jt.value("window", t.window);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("config: ill-typed quadrature or threshold value: ") + e.what());
  }
  s.validate();

  r.thresholds = {{"bounded_exponent", s.thresholds.bounded_exponent},
                  {"power_exponent", s.thresholds.power_exponent},
                  {"max_spread", s.thresholds.max_spread},
                  {"window", s.thresholds.window}};
  r.config = {{"library_version", std::string(version_string)},
              {"experiment", r.experiment},
              {"measure", to_literal(s.measure)},
              {"domain", to_literal(s.domain)},
              {"codomain", to_literal(s.codomain)},
              {"family", family_literal(s.family)},
              {"bmin_exp", custom_grid ? ordered_json(nullptr) : ordered_json(bmin)},
              {"bmax_exp", custom_grid ? ordered_json(nullptr) : ordered_json(bmax)},
              {"b_grid", s.b_grid},
              {"input_route", to_string(s.input_route)},
              {"output_route", to_string(s.output_route)},
              {"truncation_factor", s.truncation_factor},
              {"output_factor", s.output_factor},
              {"quadrature",
               {{"radial_shells", s.quadrature.radial_shells},
                {"nodes_per_shell", s.quadrature.nodes_per_shell},
                {"angular_factor", s.quadrature.angular_factor},
                {"fractional_angular_factor", s.quadrature.fractional_angular_factor},
                {"refinement_tolerance", s.quadrature.refinement_tolerance},
                {"max_angular_points", s.quadrature.max_angular_points}}},
              {"thresholds", r.thresholds}};
  return r;
}

}  // namespace hankel::cli
