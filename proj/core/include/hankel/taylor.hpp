#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hankel {

/// Truncated power series Σ_{k=0}^{K} a_k z^k. The degree is the storage bound; trailing
/// zero coefficients are allowed.
class TaylorPolynomial {
 public:
  using value_type = std::complex<double>;

  TaylorPolynomial() : a_(1, 0.0) {}
  explicit TaylorPolynomial(std::vector<value_type> coeffs);
  static TaylorPolynomial from_real(std::span<const double> coeffs);
  static TaylorPolynomial monomial(std::size_t n, value_type c = 1.0);

  std::size_t degree() const noexcept { return a_.size() - 1; }
  const std::vector<value_type>& coeffs() const noexcept { return a_; }
  value_type operator[](std::size_t k) const { return k < a_.size() ? a_[k] : value_type{}; }

  /// Horner evaluation. Throws DomainError for |z| > 1.
  value_type evaluate(value_type z) const;
  /// Horner evaluation without the closed-disc check (for internal quadrature use).
  value_type evaluate_unchecked(value_type z) const noexcept;

  TaylorPolynomial derivative() const;

  /// True when every coefficient is real (imaginary part exactly zero).
  bool is_real() const noexcept;
  /// Real parts of the coefficients.
  std::vector<double> real_coeffs() const;

  TaylorPolynomial& operator+=(const TaylorPolynomial& o);
  TaylorPolynomial& operator*=(value_type s);
  friend TaylorPolynomial operator+(TaylorPolynomial a, const TaylorPolynomial& b) { return a += b; }
  friend TaylorPolynomial operator*(value_type s, TaylorPolynomial a) { return a *= s; }

 private:
  std::vector<value_type> a_;
};

}  // namespace hankel
