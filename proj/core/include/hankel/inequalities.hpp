#pragma once

#include <vector>

#include "hankel/measure.hpp"
#include "hankel/spaces.hpp"
#include "hankel/taylor.hpp"

namespace hankel {

/// π‖f‖_{H¹} - ∫_0^1 |f(t)| dt.
double fejer_riesz_check(const TaylorPolynomial& f, const QuadratureScheme& q = {});

/// π‖f‖_{H¹} - Σ a_n/(n+1) for real non-negative coefficients (PreconditionError otherwise).
double hardy_coefficient_check(const TaylorPolynomial& f, const QuadratureScheme& q = {});

/// 2 Σ a_n/(n+1) - ‖f‖_{H¹} for non-negative coefficients non-increasing from index 1.
double vinogradov_check(const TaylorPolynomial& f, const QuadratureScheme& q = {});

/// Non-negative step function on (0,1): value[i] on (breaks[i], breaks[i+1]).
struct StepFunction {
  std::vector<double> breaks;  // 0 = x_0 < x_1 < ... < x_m = 1
  std::vector<double> values;  // m entries, all >= 0

  void validate() const;
};

struct HardyLemmaResult {
  double lhs = 0.0;    // ∫_0^1 (∫_{1-r}^1 h)^q (1-r)^{k-1} dr
  double rhs = 0.0;    // (q/k)^q ∫_0^1 h(1-r)^q (1-r)^{q+k-1} dr
  double slack = 0.0;  // rhs - lhs
};

/// Both sides in closed form piece by piece (regularized incomplete beta on each piece of
/// the left side). Requires q > 1, k > 0 and at most 64 pieces.
HardyLemmaResult hardy_integral_lemma_check(const StepFunction& h, double q, double k);

enum class LemmaVariant { Bergman, Dirichlet };

struct MInftyLemmaResult {
  double lhs = 0.0;        // ∫ M_∞^p(r,f) (1-r)^e dμ(r), e = α+1 or α-p+1
  double norm_power = 0.0; // ‖f‖^p in A^p_α or 𝒟^p_α
  double ratio = 0.0;
  bool carleson_warning = false;  // the measure failed the empirical Carleson verdict
};

/// Ratio of the two sides of the M_∞ lemmas; `f` may be any circle sampler.
MInftyLemmaResult m_infty_lemma_check(const Measure& m, const CircleSampler& f, double p, double alpha,
                                      LemmaVariant variant, const QuadratureScheme& q = {});
MInftyLemmaResult m_infty_lemma_check(const Measure& m, const TaylorPolynomial& f, double p, double alpha,
                                      LemmaVariant variant, const QuadratureScheme& q = {});

}  // namespace hankel
