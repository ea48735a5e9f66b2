#include "hankel/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hankel/errors.hpp"
#include "hankel/fft.hpp"
#include "hankel/quadrature.hpp"

namespace hankel {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_integer_p(double p) { return std::isfinite(p) && p == std::floor(p); }

// |f|^p is a trigonometric polynomial on circles only for even integer p.
bool is_even_integer_p(double p) { return is_integer_p(p) && std::fmod(p, 2.0) == 0.0; }

double log_weight(double u) { return std::log(2.0 / u); }

// Neumaier-compensated running sum.
class Accumulator {
 public:
  void add(double x) {
    const double t = sum_ + x;
    comp_ += std::abs(sum_) >= std::abs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0, comp_ = 0.0;
};

double mean_power(const std::vector<std::complex<double>>& s, double p) {
  if (p == kInf) {
    double m = 0.0;
    for (const auto& v : s) m = std::max(m, std::abs(v));
    return m;
  }
  Accumulator acc;
  if (p == 2.0) {
    for (const auto& v : s) acc.add(std::norm(v));
  } else {
    for (const auto& v : s) acc.add(std::pow(std::abs(v), p));
  }
  return acc.value() / static_cast<double>(s.size());
}

enum class Which { Value, Derivative };

// M_p(r)^p (or M_∞) of f or f' with the sampler's resolution; refined by doubling when
// the integrand is not a trigonometric polynomial and `refine` is set.
double circle_power(const CircleSampler& f, Which which, double r, double p, const QuadratureScheme& q,
                    bool refine) {
  std::size_t n = std::min(f.resolution(r, p, q), q.max_angular_points);
  auto sample = [&](std::size_t m) {
    return which == Which::Value ? f.values(r, m) : f.derivative_values(r, m);
  };
  double v = mean_power(sample(n), p);
  const bool exact = f.exact_for_integer_p() && is_even_integer_p(p);
  if (!refine || exact) return v;
  while (n * 2 <= q.max_angular_points) {
    n *= 2;
    const double w = mean_power(sample(n), p);
    const bool done = std::abs(w - v) <= q.refinement_tolerance * std::abs(w);
    v = w;
    if (done) break;
  }
  return v;
}

// ∫_0^1 weight(u) M(1-u) du over dyadic shells in u = 1 - r, plus M(1)·tail_weight(h) for
// the innermost sliver [0, h].
template <class Weight, class Tail>
double radial_integral(const CircleSampler& f, Which which, double p, const QuadratureScheme& q, Weight weight,
                       Tail tail_weight) {
  const auto nodes = dyadic_shell_rule(1.0, q.radial_shells, q.nodes_per_shell);
  Accumulator acc;
  for (const auto& n : nodes) {
    const double r = 1.0 - n.u;
    acc.add(n.w * weight(n.u) * circle_power(f, which, r, p, q, true));
  }
  const double h = std::ldexp(1.0, -q.radial_shells - 1);
  acc.add(tail_weight(h) * circle_power(f, which, 1.0, p, q, true));
  return acc.value();
}

double bergman_power(const CircleSampler& f, Which which, double p, double alpha, const QuadratureScheme& q) {
  return (alpha + 1.0) * radial_integral(
                             f, which, p, q,
                             [&](double u) { return std::pow(u * (2.0 - u), alpha) * 2.0 * (1.0 - u); },
                             [&](double h) { return std::pow(h * (2.0 - h), alpha + 1.0) / (alpha + 1.0); });
}

double log_bergman(const CircleSampler& f, Which which, double gamma, const QuadratureScheme& q) {
  return radial_integral(
      f, which, 1.0, q, [&](double u) { return std::pow(log_weight(u), gamma) * 2.0 * (1.0 - u); },
      [&](double h) { return 2.0 * h * std::pow(log_weight(h), gamma); });
}

double bloch_sup(const CircleSampler& f, double gamma, const QuadratureScheme& q) {
  std::vector<double> us;
  for (const auto& n : dyadic_shell_rule(1.0, q.radial_shells, q.nodes_per_shell)) us.push_back(n.u);
  for (int j = 1; j <= q.radial_shells; ++j) us.push_back(std::ldexp(1.0, -j));
  double best = 0.0;
  for (double u : us) {
    double w = u * (2.0 - u);
    if (gamma != 0.0) w *= std::pow(log_weight(u), -gamma);
    best = std::max(best, w * circle_power(f, Which::Derivative, 1.0 - u, kInf, q, false));
  }
  return best;
}

}  // namespace

SpaceSpec SpaceSpec::hardy(double p) { return {SpaceKind::Hardy, p, 0.0, 0.0}; }
SpaceSpec SpaceSpec::bergman(double p, double alpha) { return {SpaceKind::Bergman, p, alpha, 0.0}; }
SpaceSpec SpaceSpec::dirichlet(double p, double alpha) { return {SpaceKind::Dirichlet, p, alpha, 0.0}; }
SpaceSpec SpaceSpec::bloch() { return {SpaceKind::Bloch, 1.0, 0.0, 0.0}; }
SpaceSpec SpaceSpec::log_bloch(double gamma) { return {SpaceKind::LogBloch, 1.0, 0.0, gamma}; }
SpaceSpec SpaceSpec::log_bergman1(double gamma) { return {SpaceKind::LogBergman1, 1.0, 0.0, gamma}; }
SpaceSpec SpaceSpec::log_dirichlet1(double gamma) { return {SpaceKind::LogDirichlet1, 1.0, 0.0, gamma}; }

void SpaceSpec::validate() const {
  switch (kind) {
    case SpaceKind::Hardy:
      if (!(p > 0.0) || !std::isfinite(p)) throw ArgumentError("Hardy space needs 0 < p < infinity");
      return;
    case SpaceKind::Bergman:
    case SpaceKind::Dirichlet:
      if (!(p > 0.0) || !std::isfinite(p)) throw ArgumentError("space needs 0 < p < infinity");
      if (!(alpha > -1.0) || !std::isfinite(alpha)) throw ArgumentError("space needs alpha > -1");
      return;
    case SpaceKind::Bloch:
      return;
    case SpaceKind::LogBloch:
    case SpaceKind::LogBergman1:
    case SpaceKind::LogDirichlet1:
      if (!std::isfinite(gamma)) throw ArgumentError("log-weighted space needs a finite gamma");
      return;
  }
  throw ArgumentError("unknown space kind");
}

PolynomialSampler::PolynomialSampler(const TaylorPolynomial& f) : f_(f), df_(f.derivative()) {}

std::vector<std::complex<double>> PolynomialSampler::values(double r, std::size_t n) const {
  return fft::sample_circle(f_.coeffs(), r, n);
}

std::vector<std::complex<double>> PolynomialSampler::derivative_values(double r, std::size_t n) const {
  return fft::sample_circle(df_.coeffs(), r, n);
}

std::size_t PolynomialSampler::resolution(double r, double p, const QuadratureScheme& q) const {
  // Inside the disc, terms with r^k < 1e-17 only alias into the samples at rounding level.
  std::size_t K = f_.degree();
  if (r < 1.0) K = std::min<std::size_t>(K, static_cast<std::size_t>(std::ceil(-39.2 / std::log(std::max(r, 1e-300)))));
  if (is_integer_p(p)) return next_pow2(static_cast<std::size_t>(q.angular_factor) * (static_cast<std::size_t>(p) * K + 1));
  return next_pow2(static_cast<std::size_t>(q.fractional_angular_factor) * (K + 1));
}

double integral_mean(const CircleSampler& f, double r, double p, const QuadratureScheme& q) {
  if (!(p > 0.0)) throw ArgumentError("integral_mean: p must be positive");
  if (!(r >= 0.0 && r <= 1.0)) throw DomainError("integral_mean: r must lie in [0, 1]");
  const double v = circle_power(f, Which::Value, r, p, q, true);
  return p == kInf ? v : std::pow(v, 1.0 / p);
}

double integral_mean(const TaylorPolynomial& f, double r, double p, const QuadratureScheme& q) {
  return integral_mean(PolynomialSampler(f), r, p, q);
}

double norm(const CircleSampler& f, const SpaceSpec& s, const QuadratureScheme& q) {
  s.validate();
  switch (s.kind) {
    case SpaceKind::Hardy:
      return std::pow(circle_power(f, Which::Value, 1.0, s.p, q, true), 1.0 / s.p);
    case SpaceKind::Bergman:
      return std::pow(bergman_power(f, Which::Value, s.p, s.alpha, q), 1.0 / s.p);
    case SpaceKind::Dirichlet:
      return std::abs(f.at_origin()) + std::pow(bergman_power(f, Which::Derivative, s.p, s.alpha, q), 1.0 / s.p);
    case SpaceKind::Bloch:
      return std::abs(f.at_origin()) + bloch_sup(f, 0.0, q);
    case SpaceKind::LogBloch:
      return std::abs(f.at_origin()) + bloch_sup(f, s.gamma, q);
    case SpaceKind::LogBergman1:
      return log_bergman(f, Which::Value, s.gamma, q);
    case SpaceKind::LogDirichlet1:
      return std::abs(f.at_origin()) + log_bergman(f, Which::Derivative, s.gamma, q);
  }
  throw ArgumentError("unknown space kind");
}

double norm(const TaylorPolynomial& f, const SpaceSpec& s, const QuadratureScheme& q) {
  return norm(PolynomialSampler(f), s, q);
}

bool has_coefficient_norm(const SpaceSpec& s) {
  switch (s.kind) {
    case SpaceKind::Bergman:
      return s.p > 1.0 && s.alpha > -1.0;
    case SpaceKind::Dirichlet:
      if (s.p == 1.0) return s.alpha == 0.0;
      return s.p > 1.0 && s.alpha > s.p - 2.0 && s.alpha <= s.p - 1.0;
    default:
      return false;
  }
}

double coefficient_norm(const std::vector<double>& a, const SpaceSpec& s) {
  s.validate();
  if (!has_coefficient_norm(s))
    throw ArgumentError("coefficient_norm: no coefficient functional for this space and parameter range");
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (!(a[n] >= 0.0) || !std::isfinite(a[n]))
      throw PreconditionError("coefficient_norm: coefficient " + std::to_string(n) + " is negative or not finite");
    if (n >= 2 && a[n] > a[n - 1])
      throw PreconditionError("coefficient_norm: coefficients increase at index " + std::to_string(n));
  }
  Accumulator acc;
  if (s.kind == SpaceKind::Dirichlet && s.p == 1.0) {
    for (std::size_t n = 0; n < a.size(); ++n) acc.add(a[n] / (static_cast<double>(n) + 1.0));
    return acc.value();
  }
  if (s.kind == SpaceKind::Bergman) {
    const double e = s.p - 3.0 - s.alpha;
    if (!a.empty()) acc.add(std::pow(a[0], s.p));
    for (std::size_t n = 1; n < a.size(); ++n)
      if (a[n] > 0.0) acc.add(std::pow(static_cast<double>(n), e) * std::pow(a[n], s.p));
    return std::pow(acc.value(), 1.0 / s.p);
  }
  const double e = 2.0 * s.p - s.alpha - 3.0;
  for (std::size_t n = 0; n < a.size(); ++n)
    if (a[n] > 0.0) acc.add(std::pow(static_cast<double>(n) + 1.0, e) * std::pow(a[n], s.p));
  return std::pow(acc.value(), 1.0 / s.p);
}

double coefficient_norm(const TaylorPolynomial& f, const SpaceSpec& s) {
  if (!f.is_real()) throw PreconditionError("coefficient_norm: coefficients must be real");
  return coefficient_norm(f.real_coeffs(), s);
}

}  // namespace hankel
