#include "hankel/test_functions.hpp"

#include <cmath>
#include <numbers>

#include "hankel/errors.hpp"
#include "hankel/literals.hpp"
#include "hankel/quadrature.hpp"

namespace hankel {
namespace {

// Σ_n |h_n|² w_n for h = (1 - bz)^{-κ}, with w_n = B(n+1, α+1)(α+1) for Bergman weights
// or w_n = 1 for the Hardy case (pass alpha = nullptr).
double weighted_square_sum(double b, double kappa, const double* alpha) {
  double h = 1.0;  // h_n
  double w = 1.0;  // (α+1) B(n+1, α+1), equals 1 at n = 0
  double sum = 0.0, comp = 0.0;
  for (std::size_t n = 0;; ++n) {
    const double term = h * h * w;
    const double t = sum + term;
    comp += (sum - t) + term;
    sum = t;
    const double next_h = h * b * (n + kappa) / (n + 1.0);
    if (alpha) w *= (n + 1.0) / (n + *alpha + 2.0);
    // Well past the peak of h_n the term ratio is below 1 - (1-b), so the tail is tiny.
    if (n > 16 && static_cast<double>(n) > 2.0 * kappa / (1.0 - b) && term < 1e-20 * sum) break;
    if (n > (std::size_t{1} << 34)) throw TruncationError("kernel norm series did not converge");
    h = next_h;
  }
  return sum + comp;
}

}  // namespace

double FamilySpec::lambda() const {
  switch (kind) {
    case FamilyKind::H1:
      return 2.0;
    case FamilyKind::Bergman:
      return 2.0 / p + 1.0;
    case FamilyKind::Dirichlet:
      return 2.0 / p;
  }
  return 0.0;
}

double FamilySpec::scale(double b) const {
  if (kind == FamilyKind::H1) return 1.0 - b * b;
  return std::pow(1.0 - b * b, 1.0 - alpha / p);
}

std::string FamilySpec::name() const {
  switch (kind) {
    case FamilyKind::H1:
      return "h1";
    case FamilyKind::Bergman:
      return "bergman:p=" + format_double(p) + ",alpha=" + format_double(alpha);
    case FamilyKind::Dirichlet:
      return "dirichlet:p=" + format_double(p) + ",alpha=" + format_double(alpha);
  }
  return {};
}

std::size_t default_truncation(double b, double factor) {
  return static_cast<std::size_t>(std::ceil(factor / (1.0 - b)));
}

KernelTestFunction::KernelTestFunction(FamilySpec family, double b, std::size_t K)
    : family_(family), b_(b), lambda_(family.lambda()), scale_(family.scale(b)) {
  if (!(b > 0.0 && b < 1.0)) throw DomainError("test function: b must lie in (0, 1)");
  if (family.kind != FamilyKind::H1) SpaceSpec::dirichlet(family.p, family.alpha).validate();
  if (!(std::pow(b, static_cast<double>(K)) * (K + 1.0) < 1e-12))
    throw TruncationError("test function: truncation K=" + std::to_string(K) + " too small for b=" + format_double(b));
  coeffs_.resize(K + 1);
  double c = scale_;
  for (std::size_t k = 0; k <= K; ++k) {
    coeffs_[k] = c;
    c *= b * (k + lambda_) / (k + 1.0);
  }
}

std::complex<double> KernelTestFunction::evaluate(std::complex<double> z) const {
  return scale_ * std::pow(1.0 - b_ * z, -lambda_);
}

std::complex<double> KernelTestFunction::derivative(std::complex<double> z) const {
  return scale_ * lambda_ * b_ * std::pow(1.0 - b_ * z, -lambda_ - 1.0);
}

double kernel_power_norm(double b, double lambda, double scale, const SpaceSpec& s) {
  s.validate();
  switch (s.kind) {
    case SpaceKind::Hardy:
      return scale * std::pow(weighted_square_sum(b, lambda * s.p / 2.0, nullptr), 1.0 / s.p);
    case SpaceKind::Bergman:
      return scale * std::pow(weighted_square_sum(b, lambda * s.p / 2.0, &s.alpha), 1.0 / s.p);
    case SpaceKind::Dirichlet:
      return scale + kernel_power_norm(b, lambda + 1.0, scale * lambda * b, SpaceSpec::bergman(s.p, s.alpha));
    default:
      throw ArgumentError("kernel_power_norm: no closed-form route for " + to_literal(s));
  }
}

double KernelTestFunction::exact_norm(const SpaceSpec& s) const { return kernel_power_norm(b_, lambda_, scale_, s); }

double KernelTestFunction::quadrature_norm(const SpaceSpec& s, const QuadratureScheme& q) const {
  return norm(KernelSampler(b_, lambda_, scale_), s, q);
}

namespace {

// s (1 - b z)^{-lambda} on n equispaced points of |z| = r. Real b makes the samples
// conjugate-symmetric, so only the upper half circle is evaluated.
std::vector<std::complex<double>> kernel_samples(double b, double lambda, double s, double r, std::size_t n) {
  std::vector<std::complex<double>> out(n);
  const bool integer = lambda == std::floor(lambda) && lambda <= 8.0;
  const int k = static_cast<int>(lambda);
  for (std::size_t j = 0; j <= n / 2; ++j) {
    const std::complex<double> w =
        1.0 - b * std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n));
    std::complex<double> v;
    if (integer) {
      std::complex<double> inv = 1.0 / w, acc = 1.0;
      for (int i = 0; i < k; ++i) acc *= inv;
      v = acc;
    } else {
      v = std::pow(w, -lambda);
    }
    out[j] = s * v;
    if (j != 0 && j != n - j) out[n - j] = std::conj(out[j]);
  }
  return out;
}

}  // namespace

std::vector<std::complex<double>> KernelSampler::values(double r, std::size_t n) const {
  return kernel_samples(b_, lambda_, scale_, r, n);
}

std::vector<std::complex<double>> KernelSampler::derivative_values(double r, std::size_t n) const {
  return kernel_samples(b_, lambda_ + 1.0, scale_ * lambda_ * b_, r, n);
}

std::size_t KernelSampler::resolution(double r, double p, const QuadratureScheme&) const {
  // The integrand is analytic in a strip of half-width about 1 - br around the real θ axis.
  const double width = 32.0 * std::max(1.0, std::isfinite(p) ? p / 2.0 : 1.0);
  return next_pow2(static_cast<std::size_t>(std::max(64.0, std::ceil(width / (1.0 - b_ * r)))));
}

TaylorPolynomial log_coefficient_function(std::size_t K) {
  if (K < 1) throw ArgumentError("log_coefficient_function: K must be at least 1");
  std::vector<double> a(K + 1, 0.0);
  for (std::size_t n = 1; n <= K; ++n) a[n] = 1.0 / std::log(n + 1.0);
  return TaylorPolynomial::from_real(a);
}

}  // namespace hankel
