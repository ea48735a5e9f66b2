#include "hankel/inequalities.hpp"

#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "hankel/errors.hpp"
#include "hankel/quadrature.hpp"

namespace hankel {
namespace {

double hardy1(const TaylorPolynomial& f, const QuadratureScheme& q) { return norm(f, SpaceSpec::hardy(1.0), q); }

// ∫_0^1 |f(t)| dt with 1024 Gauss-Legendre panels; |f| may have kinks at real zeros.
double abs_integral_unit(const TaylorPolynomial& f) {
  const GaussRule& g = gauss_legendre(16);
  constexpr int panels = 1024;
  double s = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double a = static_cast<double>(i) / panels, h = 1.0 / panels;
    for (std::size_t k = 0; k < g.nodes.size(); ++k)
      s += 0.5 * h * g.weights[k] * std::abs(f.evaluate_unchecked(a + 0.5 * h * (g.nodes[k] + 1.0)));
  }
  return s;
}

double harmonic_weighted_sum(const TaylorPolynomial& f) {
  double s = 0.0;
  for (std::size_t n = 0; n <= f.degree(); ++n) {
    if (f[n].imag() != 0.0 || !(f[n].real() >= 0.0))
      throw PreconditionError("coefficients must be real and non-negative");
    s += f[n].real() / (n + 1.0);
  }
  return s;
}

}  // namespace

double fejer_riesz_check(const TaylorPolynomial& f, const QuadratureScheme& q) {
  return std::numbers::pi * hardy1(f, q) - abs_integral_unit(f);
}

double hardy_coefficient_check(const TaylorPolynomial& f, const QuadratureScheme& q) {
  const double s = harmonic_weighted_sum(f);
  return std::numbers::pi * hardy1(f, q) - s;
}

double vinogradov_check(const TaylorPolynomial& f, const QuadratureScheme& q) {
  const double c = coefficient_norm(f, SpaceSpec::dirichlet(1.0, 0.0));
  return 2.0 * c - hardy1(f, q);
}

void StepFunction::validate() const {
  if (values.empty() || values.size() > 64 || breaks.size() != values.size() + 1)
    throw ArgumentError("step function: need 1..64 pieces and one more breakpoint than values");
  if (breaks.front() != 0.0 || breaks.back() != 1.0) throw ArgumentError("step function: breakpoints must span [0, 1]");
  for (std::size_t i = 1; i < breaks.size(); ++i)
    if (!(breaks[i] > breaks[i - 1])) throw ArgumentError("step function: breakpoints must increase");
  for (double v : values)
    if (!(v >= 0.0) || !std::isfinite(v)) throw ArgumentError("step function: values must be finite and non-negative");
}

HardyLemmaResult hardy_integral_lemma_check(const StepFunction& h, double q, double k) {
  if (!(q > 1.0)) throw ArgumentError("hardy_integral_lemma_check: q must exceed 1");
  if (!(k > 0.0)) throw ArgumentError("hardy_integral_lemma_check: k must be positive");
  h.validate();
  // In s = 1 - r: LHS = ∫_0^1 H(s)^q s^{k-1} ds with H(s) = ∫_s^1 h, and
  // RHS = (q/k)^q ∫_0^1 h(s)^q s^{q+k-1} ds.
  const std::size_t m = h.values.size();
  HardyLemmaResult r;
  double tail = 0.0;  // H at the right end of the current piece
  for (std::size_t i = m; i-- > 0;) {
    const double x0 = h.breaks[i], x1 = h.breaks[i + 1], v = h.values[i];
    // On the piece H(s) = c - v s with c = tail + v x1.
    if (v == 0.0) {
      if (tail > 0.0) r.lhs += std::pow(tail, q) * (std::pow(x1, k) - std::pow(x0, k)) / k;
    } else {
      const double c = tail + v * x1;
      const double y0 = v * x0 / c, y1 = std::min(1.0, v * x1 / c);
      // ∫ (c - v s)^q s^{k-1} ds = c^q (c/v)^k ∫_{y0}^{y1} (1-y)^q y^{k-1} dy
      const double inc = boost::math::beta(k, q + 1.0, y1) - boost::math::beta(k, q + 1.0, y0);
      r.lhs += std::pow(c, q) * std::pow(c / v, k) * inc;
      r.rhs += std::pow(v, q) * (std::pow(x1, q + k) - std::pow(x0, q + k)) / (q + k);
    }
    tail += v * (x1 - x0);
  }
  r.rhs *= std::pow(q / k, q);
  r.slack = r.rhs - r.lhs;
  return r;
}

MInftyLemmaResult m_infty_lemma_check(const Measure& m, const CircleSampler& f, double p, double alpha,
                                      LemmaVariant variant, const QuadratureScheme& q) {
  if (!(p > 0.0) || !(alpha > -1.0)) throw ArgumentError("m_infty_lemma_check: need p > 0 and alpha > -1");
  const double e = variant == LemmaVariant::Bergman ? alpha + 1.0 : alpha - p + 1.0;
  MInftyLemmaResult r;
  for (const auto& n : measure_nodes(m)) {
    const double r_ = n.t;
    const double minf = integral_mean(f, std::max(r_, 0.0), std::numeric_limits<double>::infinity(), q);
    r.lhs += n.w * std::pow(minf, p) * std::pow(n.u, e);
  }
  const SpaceSpec s = variant == LemmaVariant::Bergman ? SpaceSpec::bergman(p, alpha) : SpaceSpec::dirichlet(p, alpha);
  r.norm_power = std::pow(norm(f, s, q), p);
  r.ratio = r.lhs / r.norm_power;
  const auto grid = dyadic_grid();
  r.carleson_warning = !classify_trace(carleson_constant(m, 1.0, grid).values).bounded;
  return r;
}

MInftyLemmaResult m_infty_lemma_check(const Measure& m, const TaylorPolynomial& f, double p, double alpha,
                                      LemmaVariant variant, const QuadratureScheme& q) {
  return m_infty_lemma_check(m, PolynomialSampler(f), p, alpha, variant, q);
}

}  // namespace hankel
