#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "hankel/quadrature.hpp"

namespace hankel {

/// Point mass c at t.
struct Atom {
  double t;
  double c;
  bool operator==(const Atom&) const = default;
};

/// Finite sum of point masses, sorted by strictly increasing position.
struct AtomicMeasure {
  std::vector<Atom> atoms;
  bool operator==(const AtomicMeasure&) const = default;
};

/// dμ = c (1-t)^gamma (log(2/(1-t)))^delta dt on [0,1), gamma > -1.
struct DensityMeasure {
  double gamma;
  double delta;
  double c;
  bool operator==(const DensityMeasure&) const = default;
};

/// Lebesgue measure on [0,1).
struct LebesgueMeasure {
  bool operator==(const LebesgueMeasure&) const = default;
};

/// Controls the dyadic-shell rule used for density measures.
struct ShellRule {
  int shells = 40;
  int nodes_per_shell = 16;
  // Density rules add shells beyond `shells` until the untreated mass near t = 1 is below
  // this fraction of the total (capped at `max_shells`).
  double remainder_tolerance = 1e-16;
  int max_shells = 1000;
};

/// A finite positive Borel measure on [0,1). Immutable after construction.
class Measure {
 public:
  using Variant = std::variant<AtomicMeasure, DensityMeasure, LebesgueMeasure>;

  Measure() : v_(LebesgueMeasure{}) {}
  static Measure lebesgue();
  /// Atoms are sorted; duplicate positions are an error. Requires 0 <= t < 1 - 2^-60, c > 0.
  static Measure atomic(std::vector<Atom> atoms);
  /// Requires gamma > -1 and c > 0. Density(0, 0, 1) normalizes to Lebesgue.
  static Measure density(double gamma, double delta, double c = 1.0);

  const Variant& variant() const noexcept { return v_; }
  bool is_atomic() const noexcept { return std::holds_alternative<AtomicMeasure>(v_); }
  bool is_lebesgue() const noexcept { return std::holds_alternative<LebesgueMeasure>(v_); }
  const AtomicMeasure* as_atomic() const noexcept { return std::get_if<AtomicMeasure>(&v_); }
  const DensityMeasure* as_density() const noexcept { return std::get_if<DensityMeasure>(&v_); }

  /// True when moments have closed forms (atomic, Lebesgue, pure power densities).
  bool exact_moments() const noexcept;

  bool operator==(const Measure&) const = default;

 private:
  explicit Measure(Variant v) : v_(std::move(v)) {}
  Variant v_;
};

/// Quadrature nodes representing μ restricted to u = 1 - t in (0, h0]: atoms map to
/// themselves, densities get a dyadic-shell rule in u plus one remainder node carrying
/// the mass of the innermost sliver.
std::vector<ShellNode> measure_nodes(const Measure& m, double h0 = 1.0, const ShellRule& rule = {});

/// ∫ g(t, 1 - t) dμ(t). `g` receives both t and u = 1 - t so integrands can stay accurate
/// near t = 1.
template <class G>
auto integrate(const Measure& m, G&& g, const ShellRule& rule = {}) {
  using R = decltype(g(0.0, 1.0));
  R acc{};
  for (const auto& n : measure_nodes(m, 1.0, rule)) acc += n.w * g(n.t, n.u);
  return acc;
}

double total_mass(const Measure& m);

/// μ([t, 1)). Throws DomainError unless 0 <= t < 1.
double tail_mass(const Measure& m, double t);

double moment(const Measure& m, std::size_t n);

/// Cached moments μ_0..μ_N.
struct MomentTable {
  Measure source;
  std::vector<double> values;
  bool exact = false;

  std::size_t max_index() const noexcept { return values.empty() ? 0 : values.size() - 1; }
  double operator[](std::size_t n) const { return values[n]; }
};

MomentTable moments_upto(const Measure& m, std::size_t N);

/// Streams μ_0, μ_1, ... without storing them. Used for very long partial sums.
class MomentGenerator {
 public:
  explicit MomentGenerator(const Measure& m);
  double next();

 private:
  enum class Kind { Lebesgue, Power, Nodes } kind_;
  std::size_t n_ = 0;
  double value_ = 0.0;
  double shift_ = 0.0;  // gamma + 1 for power densities
  std::vector<double> t_, w_, logt_, p_;
};

/// Default grid t_j = 1 - 2^{-j}, j = 0..J.
std::vector<double> dyadic_grid(int J = 20);

/// Per-grid-point values of the Carleson quotient together with their maximum.
struct CarlesonTrace {
  std::vector<double> grid;
  std::vector<double> values;
  double constant = 0.0;
};

/// max over the grid of μ([t,1)) / (1-t)^s. Atom positions inside the grid range are
/// added to the grid for atomic measures, since the supremum sits at an atom.
CarlesonTrace carleson_constant(const Measure& m, double s, std::span<const double> grid);

/// max over the grid of μ([t,1)) (log(2/(1-t)))^alpha / (1-t)^s.
CarlesonTrace log_carleson_constant(const Measure& m, double alpha, double s, std::span<const double> grid);

/// dν = (log(2/(1-t)))^alpha dμ.
Measure log_weight_transform(const Measure& m, double alpha);

/// Frozen thresholds for the empirical bounded/unbounded call on a trace.
struct TraceThresholds {
  std::size_t window = 10;
  double max_spread = 1.5;
  double max_log_slope = 0.02;
};

struct TraceVerdict {
  bool bounded = false;
  double growth_spread = 0.0;  // max over i < j in the window of v_j / v_i
  double log_slope = 0.0;      // least-squares slope of log v against the grid index
};

/// Bounded when, over the last `window` entries, no later value exceeds an earlier one by
/// the spread factor and log(value) has no positive trend. A trace that reaches zero is
/// bounded.
TraceVerdict classify_trace(std::span<const double> values, const TraceThresholds& th = {});

}  // namespace hankel
