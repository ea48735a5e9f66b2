#include "hankel/taylor.hpp"

#include <algorithm>

#include "hankel/errors.hpp"

namespace hankel {

TaylorPolynomial::TaylorPolynomial(std::vector<value_type> coeffs) : a_(std::move(coeffs)) {
  if (a_.empty()) a_.push_back(0.0);
}

TaylorPolynomial TaylorPolynomial::from_real(std::span<const double> coeffs) {
  return TaylorPolynomial(std::vector<value_type>(coeffs.begin(), coeffs.end()));
}

TaylorPolynomial TaylorPolynomial::monomial(std::size_t n, value_type c) {
  std::vector<value_type> a(n + 1, 0.0);
  a[n] = c;
  return TaylorPolynomial(std::move(a));
}

TaylorPolynomial::value_type TaylorPolynomial::evaluate(value_type z) const {
  if (std::abs(z) > 1.0) throw DomainError("evaluate: |z| must not exceed 1");
  return evaluate_unchecked(z);
}

TaylorPolynomial::value_type TaylorPolynomial::evaluate_unchecked(value_type z) const noexcept {
  value_type s = a_.back();
  for (std::size_t k = a_.size() - 1; k-- > 0;) s = s * z + a_[k];
  return s;
}

TaylorPolynomial TaylorPolynomial::derivative() const {
  if (a_.size() == 1) return TaylorPolynomial();
  std::vector<value_type> d(a_.size() - 1);
  for (std::size_t k = 1; k < a_.size(); ++k) d[k - 1] = static_cast<double>(k) * a_[k];
  return TaylorPolynomial(std::move(d));
}

bool TaylorPolynomial::is_real() const noexcept {
  return std::all_of(a_.begin(), a_.end(), [](const value_type& c) { return c.imag() == 0.0; });
}

std::vector<double> TaylorPolynomial::real_coeffs() const {
  std::vector<double> r(a_.size());
  std::transform(a_.begin(), a_.end(), r.begin(), [](const value_type& c) { return c.real(); });
  return r;
}

TaylorPolynomial& TaylorPolynomial::operator+=(const TaylorPolynomial& o) {
  if (o.a_.size() > a_.size()) a_.resize(o.a_.size(), 0.0);
  for (std::size_t k = 0; k < o.a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

TaylorPolynomial& TaylorPolynomial::operator*=(value_type s) {
  for (auto& c : a_) c *= s;
  return *this;
}

}  // namespace hankel
