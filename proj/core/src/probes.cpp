#include "hankel/probes.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "hankel/errors.hpp"
#include "hankel/growth_fit.hpp"
#include "hankel/hankel_operator.hpp"
#include "hankel/literals.hpp"

namespace hankel {
namespace {

// Exponent e of the weight n^e (or (n+1)^e) in the coefficient functional.
double functional_weight_exponent(const SpaceSpec& s) {
  if (s.kind == SpaceKind::Bergman) return s.p - 3.0 - s.alpha;
  if (s.kind == SpaceKind::Dirichlet && s.p == 1.0) return -1.0;
  return 2.0 * s.p - s.alpha - 3.0;
}

struct OutputNorm {
  double value;
  double tail_fraction;
  double decay;
  bool tail_divergent;
};

// Coefficient functional of the truncated output plus a power-law estimate of the part
// beyond N_out. The coefficients decay like n^{-κ} once n exceeds the scale 1/(1-b), and
// κ is read off the last octave.
OutputNorm series_output_norm(const std::vector<double>& b, const SpaceSpec& s) {
  const double F = coefficient_norm(b, s);
  const double p = s.p;
  const double S = std::pow(F, p);
  const std::size_t N = b.size() - 1;
  OutputNorm out{F, 0.0, 0.0, false};
  if (N < 2 || b[N] == 0.0) {
    out.decay = std::numeric_limits<double>::infinity();
    return out;
  }
  const double kappa = std::log(b[N / 2] / b[N]) / std::log(static_cast<double>(N) / static_cast<double>(N / 2));
  const double e = functional_weight_exponent(s);
  out.decay = kappa;
  if (!(kappa * p > e + 1.0)) {
    out.tail_divergent = true;
    return out;
  }
  const double Nd = static_cast<double>(N);
  const double T = std::pow(b[N], p) * std::pow(Nd, e + 1.0) / (kappa * p - e - 1.0);
  out.value = std::pow(S + T, 1.0 / p);
  out.tail_fraction = T / (S + T);
  return out;
}

bool family_matches(const FamilySpec& f, const SpaceSpec& d) {
  switch (f.kind) {
    case FamilyKind::H1:
      return d == SpaceSpec::hardy(1.0) || d == SpaceSpec::dirichlet(1.0, 0.0);
    case FamilyKind::Bergman:
      return d == SpaceSpec::bergman(f.p, f.alpha);
    case FamilyKind::Dirichlet:
      return d == SpaceSpec::dirichlet(f.p, f.alpha);
  }
  return false;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Bounded:
      return "bounded";
    case Verdict::LogDivergent:
      return "log-divergent";
    case Verdict::PowerDivergent:
      return "power-divergent";
    case Verdict::Indeterminate:
      return "indeterminate";
  }
  return {};
}

std::string to_string(NormRoute r) { return r == NormRoute::Series ? "series" : "quadrature"; }

std::vector<double> dyadic_b_grid(int jmin, int jmax) {
  if (jmin < 2 || jmax < jmin || jmax > 40) throw ArgumentError("dyadic_b_grid: need 2 <= jmin <= jmax <= 40");
  std::vector<double> g;
  for (int j = jmin; j <= jmax; ++j) g.push_back(1.0 - std::ldexp(1.0, -j));
  return g;
}

void ProbeSpec::validate() const {
  domain.validate();
  codomain.validate();
  if (!family_matches(family, domain))
    throw ArgumentError("probe: family " + family.name() + " does not match domain " + to_literal(domain));
  if (output_route == NormRoute::Series && !has_coefficient_norm(codomain))
    throw ArgumentError("probe: norm-route mismatch, no coefficient functional for " + to_literal(codomain));
  if (input_route == NormRoute::Series &&
      !(domain.kind == SpaceKind::Hardy || domain.kind == SpaceKind::Bergman || domain.kind == SpaceKind::Dirichlet))
    throw ArgumentError("probe: norm-route mismatch for domain " + to_literal(domain));
  const auto& g = b_grid;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (!(g[i] > 0.5 && g[i] < 1.0)) throw ArgumentError("probe: b-grid values must lie in (1/2, 1)");
    if (i && !(g[i] > g[i - 1])) throw ArgumentError("probe: b-grid must be strictly increasing");
  }
  if (!g.empty() && g.size() < 3) throw ArgumentError("probe: b-grid needs at least three points");
  if (!(truncation_factor > 0.0) || !(output_factor > 0.0)) throw ArgumentError("probe: truncation factors must be positive");
}

ProbeReport run_probe(const ProbeSpec& spec_in) {
  ProbeSpec spec = spec_in;
  if (spec.b_grid.empty()) spec.b_grid = dyadic_b_grid();
  spec.validate();

  const auto& grid = spec.b_grid;
  std::size_t need = 0;
  for (double b : grid)
    need = std::max(need, default_truncation(b, spec.truncation_factor) + default_truncation(b, spec.output_factor));
  const MomentTable table = moments_upto(spec.measure, need + 1);

  ProbeReport report;
  report.rows.resize(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());

  auto work = [&](std::size_t i) {
    try {
      const double b = grid[i];
      ProbeRow row;
      row.b = b;
      row.K = default_truncation(b, spec.truncation_factor);
      row.n_out = default_truncation(b, spec.output_factor);
      const KernelTestFunction fb(spec.family, b, row.K);
      const std::vector<double> out = hankel_correlate(table.values, fb.coefficients(), row.n_out);
      row.input_norm = spec.input_route == NormRoute::Series ? fb.exact_norm(spec.domain)
                                                             : fb.quadrature_norm(spec.domain, spec.quadrature);
      if (spec.output_route == NormRoute::Series) {
        const OutputNorm o = series_output_norm(out, spec.codomain);
        row.output_norm = o.value;
        row.tail_fraction = o.tail_fraction;
        row.tail_decay = o.decay;
        row.tail_divergent = o.tail_divergent;
      } else {
        row.output_norm = norm(TaylorPolynomial::from_real(out), spec.codomain, spec.quadrature);
      }
      row.ratio = row.output_norm / row.input_norm;
      report.rows[i] = row;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(spec.threads, static_cast<unsigned>(grid.size())));
  if (threads == 1) {
    for (std::size_t i = 0; i < grid.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back([&] {
        for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) work(i);
      });
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  report.spec = std::move(spec);
  assign_verdict(report);
  return report;
}

void assign_verdict(ProbeReport& report) {
  const auto& rows = report.rows;
  const auto& th = report.spec.thresholds;
  if (rows.size() < 3) throw ArgumentError("probe: at least three rows are needed for a verdict");
  const std::size_t w = std::min(std::max<std::size_t>(th.window, 3), rows.size());
  const std::size_t first = rows.size() - w;

  std::vector<double> x, logx, y;
  for (std::size_t i = first; i < rows.size(); ++i) {
    if (!(rows[i].ratio > 0.0) || !std::isfinite(rows[i].ratio))
      throw ArgumentError("probe: ratios must be positive and finite");
    const double xi = -std::log1p(-rows[i].b);
    x.push_back(xi);
    logx.push_back(std::log(xi));
    y.push_back(std::log(rows[i].ratio));
  }
  const PowerLogFit fit = fit_power_log(x, y);
  report.e_pow = fit.e_pow;
  report.e_log = fit.e_log;
  report.slope_x = ls_slope(x, y);
  report.slope_logx = ls_slope(logx, y);

  double spread = 1.0;
  bool increasing = true;
  for (std::size_t i = first; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) spread = std::max(spread, rows[j].ratio / rows[i].ratio);
  for (std::size_t i = first + 1; i < rows.size(); ++i)
    if (!(rows[i].ratio > rows[i - 1].ratio)) increasing = false;
  report.growth_spread = spread;
  report.increasing = increasing;

  const std::size_t band = std::min<std::size_t>(6, rows.size());
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (std::size_t i = rows.size() - band; i < rows.size(); ++i) {
    const double v = rows[i].ratio / -std::log1p(-rows[i].b);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  report.log_band = hi / lo;

  if (report.e_pow > th.power_exponent)
    report.verdict = Verdict::PowerDivergent;
  else if (report.e_pow < th.bounded_exponent && spread < th.max_spread)
    report.verdict = Verdict::Bounded;
  else if (spread >= th.max_spread && increasing && report.e_log > 0.0)
    report.verdict = Verdict::LogDivergent;
  else
    report.verdict = Verdict::Indeterminate;
}

}  // namespace hankel
