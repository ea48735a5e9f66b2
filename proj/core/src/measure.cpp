#include "hankel/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hankel/errors.hpp"

namespace hankel {
namespace {

// Largest admissible atom position: atoms closer to 1 than 2^-60 make tails meaningless.
constexpr double kAtomCeiling = 1.0 - 0x1p-60;

double log_weight(double u) { return std::log(2.0 / u); }

DensityMeasure as_density_params(const Measure& m) {
  if (m.is_lebesgue()) return {0.0, 0.0, 1.0};
  return *m.as_density();
}

// ∫_0^h u^gamma L(u)^delta du, L(u) = log(2/u), from the asymptotic expansion of the
// upper incomplete gamma function. Only used for the innermost sliver, where
// (gamma+1) L(h) is large.
double sliver_mass(double gamma, double delta, double h) {
  const double a = gamma + 1.0;
  if (delta == 0.0) return std::pow(h, a) / a;
  const double y = a * log_weight(h);
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 6; ++k) {
    const double next = term * (delta - k + 1) / y;
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
  }
  return std::pow(h, a) * std::pow(log_weight(h), delta) / a * sum;
}

std::vector<ShellNode> density_nodes(const DensityMeasure& d, double h0, const ShellRule& rule) {
  auto weight = [&](double u) { return d.c * std::pow(u, d.gamma) * std::pow(log_weight(u), d.delta); };
  const GaussRule& g = gauss_legendre(rule.nodes_per_shell);
  std::vector<ShellNode> out;
  double mass = 0.0;
  int j = 0;
  const int cap = std::max(rule.shells, rule.max_shells);
  for (;; ++j) {
    const double hi = std::ldexp(h0, -j);
    const double lo = 0.5 * hi;
    const double mid = 0.5 * (hi + lo), rad = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < g.nodes.size(); ++i) {
      const double u = mid + rad * g.nodes[i];
      const double w = rad * g.weights[i] * weight(u);
      out.push_back({1.0 - u, u, w});
      mass += w;
    }
    if (j >= rule.shells) {
      const double rest = d.c * sliver_mass(d.gamma, d.delta, lo);
      if (rest <= rule.remainder_tolerance * (mass + rest) || j >= cap) break;
    }
  }
  const double h = std::ldexp(h0, -j - 1);
  const double rest = d.c * sliver_mass(d.gamma, d.delta, h);
  const double u = h * (d.gamma + 1.0) / (d.gamma + 2.0);
  if (rest > 0.0) out.push_back({1.0 - u, u, rest});
  return out;
}

}  // namespace

Measure Measure::lebesgue() { return Measure(LebesgueMeasure{}); }

Measure Measure::atomic(std::vector<Atom> atoms) {
  for (const auto& a : atoms) {
    if (!(a.t >= 0.0 && a.t < kAtomCeiling)) throw DomainError("atom position must satisfy 0 <= t < 1 - 2^-60");
    if (!(a.c > 0.0) || !std::isfinite(a.c)) throw ArgumentError("atom mass must be positive and finite");
  }
  std::sort(atoms.begin(), atoms.end(), [](const Atom& x, const Atom& y) { return x.t < y.t; });
  for (std::size_t i = 1; i < atoms.size(); ++i)
    if (atoms[i].t == atoms[i - 1].t) throw ArgumentError("duplicate atom position");
  return Measure(AtomicMeasure{std::move(atoms)});
}

Measure Measure::density(double gamma, double delta, double c) {
  if (!(gamma > -1.0) || !std::isfinite(gamma)) throw ArgumentError("density exponent gamma must exceed -1");
  if (!std::isfinite(delta)) throw ArgumentError("density log exponent must be finite");
  if (!(c > 0.0) || !std::isfinite(c)) throw ArgumentError("density scale must be positive");
  if (gamma == 0.0 && delta == 0.0 && c == 1.0) return lebesgue();
  return Measure(DensityMeasure{gamma, delta, c});
}

bool Measure::exact_moments() const noexcept {
  if (const auto* d = as_density()) return d->delta == 0.0;
  return true;
}

std::vector<ShellNode> measure_nodes(const Measure& m, double h0, const ShellRule& rule) {
  if (const auto* a = m.as_atomic()) {
    std::vector<ShellNode> out;
    for (const auto& atom : a->atoms)
      if (1.0 - atom.t <= h0) out.push_back({atom.t, 1.0 - atom.t, atom.c});
    return out;
  }
  return density_nodes(as_density_params(m), h0, rule);
}

double total_mass(const Measure& m) { return tail_mass(m, 0.0); }

double tail_mass(const Measure& m, double t) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("tail_mass: t must lie in [0, 1)");
  if (const auto* a = m.as_atomic()) {
    double s = 0.0;
    for (const auto& atom : a->atoms)
      if (atom.t >= t) s += atom.c;
    return s;
  }
  const DensityMeasure d = as_density_params(m);
  const double h = 1.0 - t;
  if (d.delta == 0.0) return d.c * std::pow(h, d.gamma + 1.0) / (d.gamma + 1.0);
  double s = 0.0;
  for (const auto& n : density_nodes(d, h, ShellRule{})) s += n.w;
  return s;
}

double moment(const Measure& m, std::size_t n) {
  if (m.is_lebesgue()) return 1.0 / (static_cast<double>(n) + 1.0);
  if (const auto* a = m.as_atomic()) {
    double s = 0.0;
    for (const auto& atom : a->atoms) s += atom.c * std::pow(atom.t, static_cast<double>(n));
    return s;
  }
  const auto* d = m.as_density();
  if (d->delta == 0.0) {
    double v = d->c / (d->gamma + 1.0);
    for (std::size_t k = 1; k <= n; ++k) v *= k / (k + d->gamma + 1.0);
    return v;
  }
  double s = 0.0;
  for (const auto& node : measure_nodes(m)) s += node.w * std::exp(static_cast<double>(n) * std::log1p(-node.u));
  return s;
}

MomentGenerator::MomentGenerator(const Measure& m) {
  if (m.is_lebesgue()) {
    kind_ = Kind::Lebesgue;
    return;
  }
  const auto* d = m.as_density();
  if (d && d->delta == 0.0) {
    kind_ = Kind::Power;
    shift_ = d->gamma + 1.0;
    value_ = d->c / shift_;
    return;
  }
  kind_ = Kind::Nodes;
  for (const auto& node : measure_nodes(m)) {
    t_.push_back(node.t);
    w_.push_back(node.w);
    logt_.push_back(std::log1p(-node.u));
  }
  p_.resize(t_.size());
}

double MomentGenerator::next() {
  const std::size_t n = n_++;
  switch (kind_) {
    case Kind::Lebesgue:
      return 1.0 / (static_cast<double>(n) + 1.0);
    case Kind::Power:
      if (n > 0) value_ *= n / (n + shift_);
      return value_;
    case Kind::Nodes:
      break;
  }
  // p_ holds w_i t_i^n, re-anchored against exp(n log t_i) so rounding does not accumulate.
  double s = 0.0;
  const bool anchor = n % 32 == 0;
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (anchor) p_[i] = w_[i] * std::exp(static_cast<double>(n) * logt_[i]);
    else p_[i] *= t_[i];
    s += p_[i];
  }
  return s;
}

MomentTable moments_upto(const Measure& m, std::size_t N) {
  MomentTable table{m, std::vector<double>(N + 1), m.exact_moments()};
  if (m.is_atomic()) {
    // Closed form with periodic re-anchoring against pow to keep atoms exact.
    const auto& atoms = m.as_atomic()->atoms;
    std::vector<double> p(atoms.size());
    for (std::size_t n = 0; n <= N; ++n) {
      double s = 0.0;
      for (std::size_t i = 0; i < atoms.size(); ++i) {
        if (n % 32 == 0) p[i] = std::pow(atoms[i].t, static_cast<double>(n));
        else p[i] *= atoms[i].t;
        s += atoms[i].c * p[i];
      }
      table.values[n] = s;
    }
    return table;
  }
  if (const auto* d = m.as_density(); d && d->delta != 0.0) {
    const auto nodes = measure_nodes(m);
    std::vector<double> logt(nodes.size()), p(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) logt[i] = std::log1p(-nodes[i].u);
    std::size_t active = nodes.size();
    std::vector<std::size_t> idx(nodes.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t n = 0; n <= N; ++n) {
      double s = 0.0;
      const bool anchor = n % 32 == 0;
      for (std::size_t a = 0; a < active; ++a) {
        const std::size_t i = idx[a];
        if (anchor) p[i] = nodes[i].w * std::exp(static_cast<double>(n) * logt[i]);
        else p[i] *= nodes[i].t;
        s += p[i];
      }
      table.values[n] = s;
      if (anchor) {
        // Nodes whose weight has decayed below the denormal range contribute nothing further.
        std::size_t keep = 0;
        for (std::size_t a = 0; a < active; ++a)
          if (p[idx[a]] >= std::numeric_limits<double>::min()) idx[keep++] = idx[a];
        active = keep;
      }
    }
    return table;
  }
  MomentGenerator gen(m);
  for (std::size_t n = 0; n <= N; ++n) table.values[n] = gen.next();
  return table;
}

std::vector<double> dyadic_grid(int J) {
  if (J < 0) throw ArgumentError("dyadic_grid: J must be non-negative");
  std::vector<double> g(J + 1);
  for (int j = 0; j <= J; ++j) g[j] = 1.0 - std::ldexp(1.0, -j);
  return g;
}

namespace {

CarlesonTrace carleson_impl(const Measure& m, double alpha, double s, std::span<const double> grid) {
  if (grid.empty()) throw ArgumentError("carleson constant: grid must be non-empty");
  if (!(s > 0.0)) throw ArgumentError("carleson constant: s must be positive");
  if (!(alpha >= 0.0)) throw ArgumentError("carleson constant: alpha must be non-negative");
  auto quotient = [&](double t) {
    const double h = 1.0 - t;
    double q = tail_mass(m, t) / std::pow(h, s);
    if (alpha != 0.0) q *= std::pow(log_weight(h), alpha);
    return q;
  };
  CarlesonTrace tr;
  tr.grid.assign(grid.begin(), grid.end());
  for (double t : grid) {
    if (!(t >= 0.0 && t < 1.0)) throw DomainError("carleson constant: grid points must lie in [0, 1)");
    tr.values.push_back(quotient(t));
  }
  tr.constant = *std::max_element(tr.values.begin(), tr.values.end());
  if (const auto* a = m.as_atomic()) {
    const auto [lo, hi] = std::minmax_element(grid.begin(), grid.end());
    for (const auto& atom : a->atoms)
      if (atom.t >= *lo && atom.t <= *hi) tr.constant = std::max(tr.constant, quotient(atom.t));
  }
  return tr;
}

}  // namespace

CarlesonTrace carleson_constant(const Measure& m, double s, std::span<const double> grid) {
  return carleson_impl(m, 0.0, s, grid);
}

CarlesonTrace log_carleson_constant(const Measure& m, double alpha, double s, std::span<const double> grid) {
  return carleson_impl(m, alpha, s, grid);
}

Measure log_weight_transform(const Measure& m, double alpha) {
  if (const auto* a = m.as_atomic()) {
    auto atoms = a->atoms;
    for (auto& atom : atoms) atom.c *= std::pow(log_weight(1.0 - atom.t), alpha);
    return Measure::atomic(std::move(atoms));
  }
  const DensityMeasure d = as_density_params(m);
  return Measure::density(d.gamma, d.delta + alpha, d.c);
}

TraceVerdict classify_trace(std::span<const double> values, const TraceThresholds& th) {
  if (values.empty()) throw ArgumentError("classify_trace: empty trace");
  const std::size_t w = std::min(th.window, values.size());
  const auto tail = values.subspan(values.size() - w);
  TraceVerdict v;
  if (tail.back() == 0.0) {
    v.bounded = true;
    return v;
  }
  double spread = 1.0;
  for (std::size_t i = 0; i < w; ++i)
    for (std::size_t j = i + 1; j < w; ++j) {
      if (tail[i] > 0.0) spread = std::max(spread, tail[j] / tail[i]);
      else if (tail[j] > 0.0) spread = std::numeric_limits<double>::infinity();
    }
  double sx = 0, sy = 0, sxx = 0, sxy = 0, k = 0;
  for (std::size_t i = 0; i < w; ++i) {
    if (!(tail[i] > 0.0)) continue;
    const double x = static_cast<double>(i), y = std::log(tail[i]);
    sx += x; sy += y; sxx += x * x; sxy += x * y; k += 1;
  }
  const double den = k * sxx - sx * sx;
  v.log_slope = den > 0.0 ? (k * sxy - sx * sy) / den : 0.0;
  v.growth_spread = spread;
  v.bounded = spread < th.max_spread && v.log_slope < th.max_log_slope;
  return v;
}

}  // namespace hankel
