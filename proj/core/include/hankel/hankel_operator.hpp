#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hankel/measure.hpp"
#include "hankel/taylor.hpp"

namespace hankel {

enum class HankelMethod {
  Auto,    // direct below kFftThreshold multiply-adds, FFT above
  Direct,  // plain double sum
  Fft      // zero-padded real FFT correlation
};

/// Result of H_μ applied to a polynomial, truncated at degree N_out.
struct HankelApplication {
  TaylorPolynomial input;
  Measure measure;
  std::size_t moments_used = 0;  // moment indices 0..moments_used-1 were read
  TaylorPolynomial output;       // b_n = Σ_k μ_{n+k} a_k, n = 0..N_out
  /// Bound on every discarded output coefficient b_n, n > N_out: μ_{N_out+1} Σ|a_k|.
  double residual_bound = 0.0;
  /// Bound on the floating-point error of each reported b_n.
  double rounding_bound = 0.0;
  HankelMethod method = HankelMethod::Direct;
};

/// Multiply-add count above which HankelMethod::Auto switches to the FFT path.
inline constexpr std::size_t kFftThreshold = std::size_t{1} << 22;

/// Requires mt.max_index() >= N_out + f.degree(); throws ArgumentError naming the index.
HankelApplication hankel_apply(const MomentTable& mt, const TaylorPolynomial& f, std::size_t N_out,
                               HankelMethod method = HankelMethod::Auto);

/// Real-coefficient core of hankel_apply: b_n = Σ_k μ_{n+k} a_k for n = 0..N_out.
std::vector<double> hankel_correlate(std::span<const double> moments, std::span<const double> a, std::size_t N_out,
                                     HankelMethod method = HankelMethod::Auto);

/// I_μ f(z) = ∫ f(t)/(1 - tz) dμ(t) by measure quadrature (exact sum for atoms).
/// Throws DomainError unless |z| < 1.
std::complex<double> integral_apply(const Measure& m, const TaylorPolynomial& f, std::complex<double> z,
                                    const ShellRule& rule = {});

/// (I_μ f)'(z) = ∫ t f(t)/(1 - tz)² dμ(t), differentiating the kernel under the integral.
std::complex<double> integral_apply_derivative(const Measure& m, const TaylorPolynomial& f, std::complex<double> z,
                                               const ShellRule& rule = {});

struct AgreementResult {
  double max_deviation = 0.0;  // max |H_μ f(z) - I_μ f(z)| / (1 + |I_μ f(z)|)
  std::size_t n_out = 0;
};

/// Compares the coefficient route with the integral route on a grid inside |z| <= 0.9.
/// N_out is chosen so that the evaluation tail μ_0 Σ|a_k| ρ^{N+1}/(1-ρ) is below 1e-12,
/// ρ being the largest |z| on the grid.
AgreementResult agreement_check(const Measure& m, const TaylorPolynomial& f,
                                std::span<const std::complex<double>> grid);

struct DivergenceOptions {
  int levels = 25;      // partial sums up to N = 2^levels
  int first_fit_level = 10;
  double confidence = 0.95;
  double max_relative_rms = 0.15;
};

struct DivergenceResult {
  bool divergent = false;
  std::vector<double> partial_sums;  // S_{2^j}, j = 0..levels
  std::vector<double> increments;    // S_{2^{j+1}} - S_{2^j}, j = 0..levels-1
  double c = 0.0;                    // least-squares fit increments ≈ c / j over the fit range
  double c_lower = 0.0;              // one-sided lower confidence bound on c
  double relative_rms = 0.0;
  bool geometric_decay = false;
};

/// Partial sums S_N = Σ_{n<=N} μ_n a_n at N = 2^j. Divergent when the block increments on
/// j = first_fit_level..levels-1 follow c/j with a positive lower confidence bound on c and
/// a relative RMS misfit below the threshold; convergent otherwise (in particular when the
/// increments vanish or decay geometrically).
DivergenceResult divergence_probe(const Measure& m, const std::function<double(std::size_t)>& a,
                                  const DivergenceOptions& opt = {});

}  // namespace hankel
