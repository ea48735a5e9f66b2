#include "hankel/suite.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>

#include "hankel/errors.hpp"
#include "hankel/identities.hpp"
#include "hankel/inequalities.hpp"
#include "hankel/literals.hpp"

namespace hankel {
namespace {

using Rng = std::mt19937_64;

double uniform(Rng& g, double a, double b) { return std::uniform_real_distribution<double>(a, b)(g); }
std::size_t pick(Rng& g, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(g);
}

TaylorPolynomial random_complex(Rng& g, std::size_t max_degree) {
  std::vector<std::complex<double>> a(pick(g, 0, max_degree) + 1);
  for (auto& c : a) c = {uniform(g, -1, 1), uniform(g, -1, 1)};
  return TaylorPolynomial(std::move(a));
}

TaylorPolynomial random_nonnegative(Rng& g, std::size_t max_degree) {
  std::vector<double> a(pick(g, 0, max_degree) + 1);
  for (auto& c : a) c = uniform(g, 0, 1) < 0.2 ? 0.0 : uniform(g, 0, 1);
  return TaylorPolynomial::from_real(a);
}

TaylorPolynomial random_decreasing(Rng& g, std::size_t max_degree) {
  std::vector<double> a(pick(g, 0, max_degree) + 1);
  for (auto& c : a) c = uniform(g, 0, 1);
  std::sort(a.begin() + 1, a.end(), std::greater<>());
  return TaylorPolynomial::from_real(a);
}

Measure random_atomic(Rng& g) {
  std::vector<Atom> atoms;
  const std::size_t n = pick(g, 1, 5);
  while (atoms.size() < n) {
    const double t = uniform(g, 0.1, 0.95);
    if (std::none_of(atoms.begin(), atoms.end(), [&](const Atom& a) { return a.t == t; }))
      atoms.push_back({t, uniform(g, 0.1, 1.0)});
  }
  return Measure::atomic(atoms);
}

std::string describe(const char* fmt, double a, double b) {
  char buf[160];
  std::snprintf(buf, sizeof buf, fmt, a, b);
  return buf;
}

// Runs `count` instances of `body`, which returns the deviation or slack of one instance.
SuiteCheck run_check(const std::string& name, bool inequality, double threshold, std::uint64_t seed,
                     std::size_t count, const std::function<double(Rng&, std::string&)>& body) {
  SuiteCheck c{name, inequality, threshold, 0, 0, inequality ? std::numeric_limits<double>::infinity() : 0.0, {}};
  Rng g(seed);
  for (std::size_t i = 0; i < count; ++i) {
    std::string what;
    const double v = body(g, what);
    ++c.instances;
    const bool ok = inequality ? v >= threshold : v <= threshold;
    c.worst = inequality ? std::min(c.worst, v) : std::max(c.worst, v);
    if (!ok) {
      ++c.failures;
      c.diagnostics.push_back("instance " + std::to_string(i) + ": value " + format_double(v) + " " + what);
    }
  }
  return c;
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const SuiteCheck& c) { return c.failures == 0; });
}

SuiteReport run_identity_suite(std::uint64_t seed, std::size_t count, const SuiteOptions& opt) {
  if (count == 0) throw ArgumentError("identity suite: count must be at least 1");
  SuiteReport rep{seed, count, {}};
  auto sub = [&](std::uint64_t k) { return seed * 0x9E3779B97F4A7C15ull + k; };

  if (opt.identities) {
    const DiscRule rule;
    const double tol = opt.identity_tolerance;
    rep.checks.push_back(run_check("reproducing_kernel", false, tol, sub(1), count, [&](Rng& g, std::string& w) {
      const auto h = random_complex(g, 20);
      const double t = uniform(g, 0.1, 0.95);
      w = describe("t=%.17g degree=%g", t, static_cast<double>(h.degree()));
      return bergman_reproduce_check(h, t, rule);
    }));
    rep.checks.push_back(run_check("pairing", false, tol, sub(2), count, [&](Rng& g, std::string& w) {
      const Measure m = random_atomic(g);
      const auto f = random_complex(g, 20);
      const auto h = random_complex(g, 20);
      w = "measure=" + to_literal(m);
      return pairing_identity_check(m, f, h, rule).deviation;
    }));
    rep.checks.push_back(run_check("radial_a", false, tol, sub(3), count, [&](Rng& g, std::string& w) {
      const auto h = random_complex(g, 20);
      const double t = uniform(g, 0.1, 0.95);
      w = describe("t=%.17g degree=%g", t, static_cast<double>(h.degree()));
      return radial_identity_checks(h, t, rule).deviation_a;
    }));
    rep.checks.push_back(run_check("radial_b", false, tol, sub(4), count, [&](Rng& g, std::string& w) {
      const auto h = random_complex(g, 20);
      const double t = uniform(g, 0.1, 0.95);
      w = describe("t=%.17g degree=%g", t, static_cast<double>(h.degree()));
      return radial_identity_checks(h, t, rule).deviation_b;
    }));
  }
  if (opt.inequalities) {
    const double floor = opt.slack_floor;
    rep.checks.push_back(run_check("fejer_riesz", true, floor, sub(5), count, [&](Rng& g, std::string& w) {
      const auto f = random_complex(g, 50);
      w = describe("degree=%g", static_cast<double>(f.degree()), 0.0);
      return fejer_riesz_check(f);
    }));
    rep.checks.push_back(run_check("hardy_coefficient", true, floor, sub(6), count, [&](Rng& g, std::string& w) {
      const auto f = random_nonnegative(g, 50);
      w = describe("degree=%g", static_cast<double>(f.degree()), 0.0);
      return hardy_coefficient_check(f);
    }));
    rep.checks.push_back(run_check("hardy_integral_lemma", true, floor, sub(7), count, [&](Rng& g, std::string& w) {
      StepFunction h;
      std::vector<double> cuts;
      for (int i = 0; i < 7; ++i) cuts.push_back(uniform(g, 0.0, 1.0));
      std::sort(cuts.begin(), cuts.end());
      cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
      h.breaks.push_back(0.0);
      for (double c : cuts)
        if (c > 0.0 && c < 1.0) h.breaks.push_back(c);
      h.breaks.push_back(1.0);
      for (std::size_t i = 0; i + 1 < h.breaks.size(); ++i) h.values.push_back(uniform(g, 0, 1) < 0.2 ? 0.0 : uniform(g, 0, 1));
      static constexpr double qs[] = {1.5, 2.0, 3.0};
      static constexpr double ks[] = {0.5, 1.0, 2.0};
      const double q = qs[pick(g, 0, 2)], k = ks[pick(g, 0, 2)];
      w = describe("q=%g k=%g", q, k);
      return hardy_integral_lemma_check(h, q, k).slack;
    }));
    rep.checks.push_back(run_check("vinogradov", true, floor, sub(8), count, [&](Rng& g, std::string& w) {
      const auto f = random_decreasing(g, 50);
      w = describe("degree=%g", static_cast<double>(f.degree()), 0.0);
      return vinogradov_check(f);
    }));
  }
  return rep;
}

}  // namespace hankel
