#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "hankel/taylor.hpp"

namespace hankel {

enum class SpaceKind { Hardy, Bergman, Dirichlet, Bloch, LogBloch, LogBergman1, LogDirichlet1 };

/// A function space on the unit disc with its parameters. Unused parameters stay at their
/// defaults so that equality and serialization are canonical.
///
///  - Hardy(p):          M_p(1, f)
///  - Bergman(p, α):     ((α+1) ∫ (1-|z|²)^α |f|^p dA)^{1/p}, dA normalized to area 1
///  - Dirichlet(p, α):   |f(0)| + ‖f'‖_{A^p_α}
///  - Bloch:             |f(0)| + sup (1-|z|²)|f'(z)|
///  - LogBloch(γ):       |f(0)| + sup (1-|z|²) (log 2/(1-|z|))^{-γ} |f'(z)|
///  - LogBergman1(γ):    ∫ |f| (log 2/(1-|z|))^γ dA
///  - LogDirichlet1(γ):  |f(0)| + ‖f'‖_{LogBergman1(γ)}
struct SpaceSpec {
  SpaceKind kind = SpaceKind::Hardy;
  double p = 1.0;
  double alpha = 0.0;
  double gamma = 0.0;

  static SpaceSpec hardy(double p);
  static SpaceSpec bergman(double p, double alpha);
  static SpaceSpec dirichlet(double p, double alpha);
  static SpaceSpec bloch();
  static SpaceSpec log_bloch(double gamma);
  static SpaceSpec log_bergman1(double gamma);
  static SpaceSpec log_dirichlet1(double gamma);

  /// Throws ArgumentError when parameters are out of range.
  void validate() const;
  bool operator==(const SpaceSpec&) const = default;
};

struct QuadratureScheme {
  int radial_shells = 40;
  int nodes_per_shell = 16;
  /// Angular oversampling for |f|^p with integer p: N_θ >= angular_factor (pK + 1).
  int angular_factor = 2;
  /// Angular oversampling when |f|^p is not a trigonometric polynomial: N_θ >= factor (K + 1),
  /// doubled until the result changes by less than `refinement_tolerance`.
  int fractional_angular_factor = 8;
  double refinement_tolerance = 1e-6;
  std::size_t max_angular_points = std::size_t{1} << 22;
};

/// Source of circle samples for a function analytic on a neighbourhood of the closed disc
/// (or at least continuous up to the circles that are sampled).
class CircleSampler {
 public:
  virtual ~CircleSampler() = default;
  /// f(r e^{2πij/n}), j = 0..n-1.
  virtual std::vector<std::complex<double>> values(double r, std::size_t n) const = 0;
  /// f'(r e^{2πij/n}).
  virtual std::vector<std::complex<double>> derivative_values(double r, std::size_t n) const = 0;
  virtual std::complex<double> at_origin() const = 0;
  /// Number of equispaced points that integrate |f|^p (or |f'|^p) on |z| = r accurately.
  virtual std::size_t resolution(double r, double p, const QuadratureScheme& q) const = 0;
  /// True when |f|^p for integer p is a trigonometric polynomial at the returned resolution,
  /// so that no refinement is required.
  virtual bool exact_for_integer_p() const = 0;
};

/// Samples a TaylorPolynomial through FFTs.
class PolynomialSampler final : public CircleSampler {
 public:
  explicit PolynomialSampler(const TaylorPolynomial& f);
  std::vector<std::complex<double>> values(double r, std::size_t n) const override;
  std::vector<std::complex<double>> derivative_values(double r, std::size_t n) const override;
  std::complex<double> at_origin() const override { return f_[0]; }
  std::size_t resolution(double r, double p, const QuadratureScheme& q) const override;
  bool exact_for_integer_p() const override { return true; }

 private:
  TaylorPolynomial f_, df_;
};

/// M_p(r, f) = ((1/2π)∫|f(re^{iθ})|^p dθ)^{1/p}; p = infinity gives the max over the grid.
double integral_mean(const TaylorPolynomial& f, double r, double p, const QuadratureScheme& q = {});
double integral_mean(const CircleSampler& f, double r, double p, const QuadratureScheme& q = {});

double norm(const TaylorPolynomial& f, const SpaceSpec& s, const QuadratureScheme& q = {});
double norm(const CircleSampler& f, const SpaceSpec& s, const QuadratureScheme& q = {});

/// Coefficient functionals for non-negative coefficients that are non-increasing from
/// index 1 on (a_0 does not affect membership and the test functions of interest have
/// a_0 < a_1):
///  - Bergman(p, α), p > 1:            (a_0^p + Σ_{n≥1} n^{p-3-α} a_n^p)^{1/p}
///  - Dirichlet(1, 0):                 Σ a_n/(n+1)
///  - Dirichlet(p, α), p > 1:          (Σ (n+1)^{2p-α-3} a_n^p)^{1/p}
/// Throws PreconditionError on negative, complex or increasing coefficients and
/// ArgumentError for unsupported spaces.
double coefficient_norm(const TaylorPolynomial& f, const SpaceSpec& s);
double coefficient_norm(const std::vector<double>& a, const SpaceSpec& s);

/// True if the space has a coefficient functional.
bool has_coefficient_norm(const SpaceSpec& s);

}  // namespace hankel
