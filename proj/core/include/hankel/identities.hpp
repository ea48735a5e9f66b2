#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "hankel/measure.hpp"
#include "hankel/quadrature.hpp"
#include "hankel/taylor.hpp"

namespace hankel {

/// Precomputed boundary-centred disc rule, reused across many identity checks.
class DiscRule {
 public:
  explicit DiscRule(const DiscScheme& scheme = {}) : nodes_(boundary_polar_nodes(scheme)) {}
  const std::vector<DiscNode>& nodes() const noexcept { return nodes_; }

 private:
  std::vector<DiscNode> nodes_;
};

/// |∫_𝔻 h(z)/(1 - t z̄)² dA(z) - h(t)| for 0 <= t < 1.
double bergman_reproduce_check(const TaylorPolynomial& h, double t, const DiscRule& rule = DiscRule());

struct PairingResult {
  std::complex<double> lhs;  // ∫_𝔻 h(z) conj((I_μ f)'(z)) dA(z)
  std::complex<double> rhs;  // ∫ t conj(f(t)) h(t) dμ(t)
  double deviation = 0.0;
};

PairingResult pairing_identity_check(const Measure& m, const TaylorPolynomial& f, const TaylorPolynomial& h,
                                     const DiscRule& rule = DiscRule());

struct RadialResult {
  double deviation_a = 0.0;  // ∫_0^1 r h(r²t) dr  vs  (1/2t) ∫_0^t h(s) ds
  double deviation_b = 0.0;  // ∫_𝔻 |z|² h(z)/(1 - t z̄)² dA  vs  ∫_0^1 2r³ [h(r²t) + r²t h'(r²t)] dr
  std::complex<double> lhs_a, rhs_a, lhs_b, rhs_b;
};

/// Requires 0 < t < 1; t = 0 is a DomainError for identity (a).
RadialResult radial_identity_checks(const TaylorPolynomial& h, double t, const DiscRule& rule = DiscRule());

}  // namespace hankel
