// Acceptance run: one PASS/FAIL line per criterion, tolerances and time limits fixed below.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "hankel/corpus.hpp"
#include "hankel/hankel_operator.hpp"
#include "hankel/measure.hpp"
#include "hankel/probes.hpp"
#include "hankel/spaces.hpp"
#include "hankel/suite.hpp"

using namespace hankel;
using cd = std::complex<double>;

namespace {

constexpr double kLebesgueMomentTol = 1e-12;
constexpr double kAtomicMomentTol = 1e-15;
constexpr double kNormTol = 1e-8;
constexpr double kIdentityTol = 1e-6;
constexpr double kSlackFloor = -1e-8;
constexpr double kLogBand = 2.0;
constexpr double kBoundedExponent = 0.05;
constexpr double kPowerLo = 0.35, kPowerHi = 0.65;

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void run(int id, const char* title, double limit_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = s < limit_s;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("criterion %d: %s  %s  [%s; %.2f s of %.0f s]\n", id, pass ? "PASS" : "FAIL", title, o.detail.c_str(), s,
              limit_s);
  std::fflush(stdout);
}

std::string fmt(const char* f, auto... a) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, a...);
  return buf;
}

ProbeReport probe(const std::string& name) {
  auto e = find_experiment(name);
  if (!e) throw std::runtime_error("unknown experiment " + name);
  return run_probe(e->spec);
}

Outcome moments() {
  const auto leb = moments_upto(Measure::lebesgue(), 10000);
  double worst_leb = 0;
  for (std::size_t n = 0; n <= 10000; ++n) worst_leb = std::max(worst_leb, std::abs(leb[n] - 1.0 / (n + 1.0)));
  double worst_at = 0;
  const Measure atomics[] = {Measure::atomic({{0.5, 1.0}}), Measure::atomic({{0.1, 0.3}, {0.9, 0.05}, {0.99, 0.2}}),
                             log_carleson_fixture()};
  for (const auto& m : atomics) {
    const auto t = moments_upto(m, 10000);
    for (std::size_t n = 0; n <= 10000; ++n) {
      long double o = 0;
      for (const auto& a : m.as_atomic()->atoms) o += static_cast<long double>(a.c) * std::pow(static_cast<long double>(a.t), n);
      worst_at = std::max(worst_at, static_cast<double>(std::abs(t[n] - o)));
    }
  }
  return {worst_leb <= kLebesgueMomentTol && worst_at <= kAtomicMomentTol,
          fmt("lebesgue max err %.2e, atomic max err %.2e", worst_leb, worst_at)};
}

Outcome norms() {
  std::mt19937_64 g(2024);
  std::uniform_int_distribution<int> deg(0, 100);
  std::uniform_real_distribution<double> u(-1, 1);
  double worst = 0;
  for (int i = 0; i < 200; ++i) {
    std::vector<cd> a(deg(g) + 1);
    for (auto& c : a) c = {u(g), u(g)};
    double h2 = 0, a2 = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
      h2 += std::norm(a[k]);
      a2 += std::norm(a[k]) / (k + 1.0);
    }
    const TaylorPolynomial f(a);
    worst = std::max(worst, std::abs(norm(f, SpaceSpec::hardy(2)) / std::sqrt(h2) - 1));
    worst = std::max(worst, std::abs(norm(f, SpaceSpec::bergman(2, 0)) / std::sqrt(a2) - 1));
  }
  return {worst <= kNormTol, fmt("max relative deviation %.2e over 200 polynomials", worst)};
}

Outcome suite(bool identities) {
  SuiteOptions opt;
  opt.identities = identities;
  opt.inequalities = !identities;
  opt.identity_tolerance = kIdentityTol;
  opt.slack_floor = kSlackFloor;
  const auto r = run_identity_suite(42, identities ? 100 : 1000, opt);
  std::string d;
  for (const auto& c : r.checks)
    d += fmt("%s%s %zu/%zu worst %.2e", d.empty() ? "" : ", ", c.name.c_str(), c.instances - c.failures, c.instances,
             c.worst);
  return {r.passed(), d};
}

Outcome h1d10_lebesgue() {
  const auto r = probe("h1-d10-lebesgue");
  return {r.verdict == Verdict::LogDivergent && r.log_band <= kLogBand,
          fmt("verdict %s, log band %.3f, e_pow %.3f", to_string(r.verdict).c_str(), r.log_band, r.e_pow)};
}

Outcome h1d10_fixture() {
  const auto r = probe("h1-d10-logcarleson");
  return {r.verdict == Verdict::Bounded && r.e_pow < kBoundedExponent,
          fmt("verdict %s, e_pow %.4f, spread %.3f", to_string(r.verdict).c_str(), r.e_pow, r.growth_spread)};
}

Outcome dichotomy(const std::vector<std::string>& prefixes) {
  bool ok = true;
  std::string d;
  for (const auto& p : prefixes) {
    const auto a = probe(p + "-lebesgue");
    const auto b = probe(p + "-sqrt");
    const bool good = a.verdict == Verdict::Bounded && b.verdict == Verdict::PowerDivergent && b.e_pow >= kPowerLo &&
                      b.e_pow <= kPowerHi;
    ok = ok && good;
    d += fmt("%s%s: lebesgue %s (e_pow %.3f), sqrt %s (e_pow %.3f)", d.empty() ? "" : "; ", p.c_str(),
             to_string(a.verdict).c_str(), a.e_pow, to_string(b.verdict).c_str(), b.e_pow);
  }
  return {ok, d};
}

Outcome divergent_example() {
  const auto d = divergence_probe(Measure::lebesgue(), [](std::size_t n) { return n ? 1.0 / std::log(n + 1.0) : 0.0; });
  const auto c = divergence_probe(Measure::lebesgue(),
                                  [](std::size_t n) { return std::ldexp(1.0, -static_cast<int>(std::min<std::size_t>(n, 1100))); });
  bool monotone = true;
  for (std::size_t j = 1; j < d.partial_sums.size(); ++j) monotone = monotone && d.partial_sums[j] > d.partial_sums[j - 1];
  return {d.divergent && !c.divergent && monotone && d.c > 0,
          fmt("log series %s (c %.4f, lower %.4f, rel rms %.3f), geometric %s", d.divergent ? "divergent" : "convergent",
              d.c, d.c_lower, d.relative_rms, c.divergent ? "divergent" : "convergent")};
}

Outcome consistency() {
  bool ok = true;
  std::string mismatches;
  int cells = 0;
  for (const auto& nm : measure_corpus()) {
    const auto cls = classify_measure(nm.measure);
    const auto check = [&](const std::string& prefix, bool expect_bounded) {
      const auto r = probe(prefix + "-" + nm.name);
      ++cells;
      const bool bounded = r.verdict == Verdict::Bounded;
      std::printf("  %-28s verdict %-15s e_pow %7.4f spread %7.3f  expected %s\n", (prefix + "-" + nm.name).c_str(),
                  to_string(r.verdict).c_str(), r.e_pow, r.growth_spread, expect_bounded ? "bounded" : "unbounded");
      if (bounded != expect_bounded) {
        ok = false;
        mismatches += " " + prefix + "-" + nm.name;
      }
    };
    check("h1-d10", cls.log_verdict.bounded);
    check("bergman-p4a1", cls.carleson_verdict.bounded);
    check("dirichlet-p2a05", cls.carleson_verdict.bounded);
    check("dirichlet-p2a1", cls.carleson_verdict.bounded);
  }
  return {ok, fmt("%d cells, mismatches:%s", cells, mismatches.empty() ? " none" : mismatches.c_str())};
}

}  // namespace

int main() {
  run(1, "moment exactness", 1, moments);
  run(2, "norm oracles", 30, norms);
  run(3, "identity suite", 60, [] { return suite(true); });
  run(4, "inequality constants", 60, [] { return suite(false); });
  run(5, "H1 -> D1_0 dichotomy", 120, [] {
    // Each probe has its own 60 s budget.
    const auto t0 = std::chrono::steady_clock::now();
    auto a = h1d10_lebesgue();
    const double ta = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    auto b = h1d10_fixture();
    const double tb = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() - ta;
    return Outcome{a.pass && b.pass && ta < 60 && tb < 60,
                   a.detail + fmt(" (%.1f s); ", ta) + b.detail + fmt(" (%.1f s)", tb)};
  });
  run(6, "Bergman dichotomy p=4 alpha=1", 120, [] { return dichotomy({"bergman-p4a1"}); });
  run(7, "Dirichlet dichotomy p=2 alpha in {0.5, 1}", 120, [] { return dichotomy({"dirichlet-p2a05", "dirichlet-p2a1"}); });
  run(8, "divergent example", 30, divergent_example);
  run(9, "verdict-classification consistency", 600, consistency);
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
