#include "hankel/identities.hpp"

#include <algorithm>
#include <cmath>

#include "hankel/errors.hpp"

namespace hankel {
namespace {

// ∫_0^1 g(r) dr with a Gauss-Legendre rule exact for polynomials of the given degree.
template <class G>
std::complex<double> unit_interval(G&& g, std::size_t degree) {
  const int n = static_cast<int>(std::max<std::size_t>(16, degree / 2 + 2));
  const GaussRule& rule = gauss_legendre(n);
  std::complex<double> s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) s += 0.5 * rule.weights[i] * g(0.5 * (rule.nodes[i] + 1.0));
  return s;
}

std::complex<double> kernel_integral(const TaylorPolynomial& h, double t, const DiscRule& rule, bool weight_abs2) {
  std::complex<double> s = 0.0;
  for (const auto& n : rule.nodes()) {
    const std::complex<double> d = 1.0 - t * std::conj(n.z);
    std::complex<double> v = h.evaluate_unchecked(n.z) / (d * d);
    if (weight_abs2) v *= std::norm(n.z);
    s += n.w * v;
  }
  return s;
}

}  // namespace

double bergman_reproduce_check(const TaylorPolynomial& h, double t, const DiscRule& rule) {
  if (!(t >= 0.0 && t < 1.0)) throw DomainError("bergman_reproduce_check: t must lie in [0, 1)");
  return std::abs(kernel_integral(h, t, rule, false) - h.evaluate_unchecked(t));
}

PairingResult pairing_identity_check(const Measure& m, const TaylorPolynomial& f, const TaylorPolynomial& h,
                                     const DiscRule& rule) {
  const auto mnodes = measure_nodes(m);
  // Per measure node: w t f(t), reused for every disc node.
  std::vector<double> ts;
  std::vector<std::complex<double>> wf;
  for (const auto& n : mnodes) {
    const std::complex<double> v = n.w * n.t * f.evaluate_unchecked(n.t);
    if (v == 0.0) continue;
    ts.push_back(n.t);
    wf.push_back(v);
  }
  PairingResult r;
  for (const auto& dn : rule.nodes()) {
    std::complex<double> g = 0.0;  // (I_μ f)'(z)
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const std::complex<double> d = 1.0 - ts[i] * dn.z;
      g += wf[i] / (d * d);
    }
    r.lhs += dn.w * h.evaluate_unchecked(dn.z) * std::conj(g);
  }
  for (const auto& n : mnodes) r.rhs += n.w * n.t * std::conj(f.evaluate_unchecked(n.t)) * h.evaluate_unchecked(n.t);
  r.deviation = std::abs(r.lhs - r.rhs);
  return r;
}

RadialResult radial_identity_checks(const TaylorPolynomial& h, double t, const DiscRule& rule) {
  if (!(t > 0.0 && t < 1.0)) throw DomainError("radial_identity_checks: t must lie in (0, 1)");
  const std::size_t K = h.degree();
  const TaylorPolynomial dh = h.derivative();
  RadialResult r;
  r.lhs_a = unit_interval([&](double x) { return x * h.evaluate_unchecked(x * x * t); }, 2 * K + 1);
  std::complex<double> prim = 0.0;  // ∫_0^t h(s) ds from the antiderivative
  for (std::size_t k = K + 1; k-- > 0;) prim = prim * t + h[k] / (k + 1.0);
  r.rhs_a = prim * t / (2.0 * t);
  r.deviation_a = std::abs(r.lhs_a - r.rhs_a);

  r.lhs_b = kernel_integral(h, t, rule, true);
  r.rhs_b = unit_interval(
      [&](double x) {
        const double s = x * x * t;
        return 2.0 * x * x * x * (h.evaluate_unchecked(s) + s * dh.evaluate_unchecked(s));
      },
      2 * K + 3);
  r.deviation_b = std::abs(r.lhs_b - r.rhs_b);
  return r;
}

}  // namespace hankel
