#include "hankel/hankel_operator.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hankel/errors.hpp"
#include "hankel/fft.hpp"
#include "hankel/growth_fit.hpp"
#include "hankel/quadrature.hpp"

namespace hankel {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

bool use_fft(HankelMethod method, std::size_t n_out, std::size_t K) {
  if (method == HankelMethod::Auto) return (n_out + 1) * (K + 1) > kFftThreshold;
  return method == HankelMethod::Fft;
}

}  // namespace

std::vector<double> hankel_correlate(std::span<const double> moments, std::span<const double> a, std::size_t N_out,
                                     HankelMethod method) {
  const std::size_t K = a.empty() ? 0 : a.size() - 1;
  if (moments.size() < N_out + K + 1)
    throw ArgumentError("hankel_apply: moments needed through index " + std::to_string(N_out + K) + ", table has " +
                        std::to_string(moments.size() == 0 ? 0 : moments.size() - 1));
  if (use_fft(method, N_out, K)) return fft::correlate(moments, a, N_out);
  std::vector<double> b(N_out + 1, 0.0);
  for (std::size_t n = 0; n <= N_out; ++n) {
    double s = 0.0;
    const double* mu = moments.data() + n;
    for (std::size_t k = 0; k < a.size(); ++k) s += mu[k] * a[k];
    b[n] = s;
  }
  return b;
}

HankelApplication hankel_apply(const MomentTable& mt, const TaylorPolynomial& f, std::size_t N_out,
                               HankelMethod method) {
  const std::size_t K = f.degree();
  const auto& mu = mt.values;
  if (mu.size() < N_out + K + 1)
    throw ArgumentError("hankel_apply: moments needed through index " + std::to_string(N_out + K) +
                        ", table has " + std::to_string(mt.max_index()));
  const std::span<const double> moments(mu.data(), N_out + K + 1);
  std::vector<double> re(K + 1), im(K + 1);
  double l1 = 0.0, l2 = 0.0;
  for (std::size_t k = 0; k <= K; ++k) {
    re[k] = f[k].real();
    im[k] = f[k].imag();
    l1 += std::abs(f[k]);
    l2 += std::norm(f[k]);
  }
  const bool fft_path = use_fft(method, N_out, K);
  const HankelMethod m = fft_path ? HankelMethod::Fft : HankelMethod::Direct;
  std::vector<double> br = hankel_correlate(moments, re, N_out, m);
  std::vector<double> bi;
  if (!f.is_real()) bi = hankel_correlate(moments, im, N_out, m);

  std::vector<std::complex<double>> out(N_out + 1);
  for (std::size_t n = 0; n <= N_out; ++n) out[n] = {br[n], bi.empty() ? 0.0 : bi[n]};

  HankelApplication app;
  app.input = f;
  app.measure = mt.source;
  app.moments_used = N_out + K + 1;
  app.output = TaylorPolynomial(std::move(out));
  app.residual_bound = mu[std::min(N_out + 1, mt.max_index())] * l1;
  app.method = m;
  if (fft_path) {
    double mu2 = 0.0;
    for (double v : moments) mu2 += v * v;
    const double logp = std::log2(static_cast<double>(next_pow2(N_out + K + 1)));
    app.rounding_bound = 8.0 * kEps * logp * std::sqrt(mu2 * l2);
  } else {
    app.rounding_bound = 2.0 * kEps * static_cast<double>(K + 1) * mu[0] * l1;
  }
  return app;
}

std::complex<double> integral_apply(const Measure& m, const TaylorPolynomial& f, std::complex<double> z,
                                    const ShellRule& rule) {
  if (!(std::abs(z) < 1.0)) throw DomainError("integral_apply: |z| must be below 1");
  std::complex<double> s = 0.0;
  for (const auto& n : measure_nodes(m, 1.0, rule)) s += n.w * f.evaluate_unchecked(n.t) / (1.0 - n.t * z);
  return s;
}

std::complex<double> integral_apply_derivative(const Measure& m, const TaylorPolynomial& f, std::complex<double> z,
                                               const ShellRule& rule) {
  if (!(std::abs(z) < 1.0)) throw DomainError("integral_apply_derivative: |z| must be below 1");
  std::complex<double> s = 0.0;
  for (const auto& n : measure_nodes(m, 1.0, rule)) {
    const std::complex<double> d = 1.0 - n.t * z;
    s += n.w * n.t * f.evaluate_unchecked(n.t) / (d * d);
  }
  return s;
}

AgreementResult agreement_check(const Measure& m, const TaylorPolynomial& f,
                                std::span<const std::complex<double>> grid) {
  double rho = 0.0;
  for (const auto& z : grid) rho = std::max(rho, std::abs(z));
  if (grid.empty()) throw ArgumentError("agreement_check: empty grid");
  if (rho > 0.9) throw DomainError("agreement_check: grid must lie in |z| <= 0.9");
  double l1 = 0.0;
  for (const auto& c : f.coeffs()) l1 += std::abs(c);
  const double scale = total_mass(m) * std::max(l1, 1e-300);
  std::size_t N = 16;
  if (rho > 0.0) {
    const double need = std::log(1e-12 * (1.0 - rho) / scale) / std::log(rho);
    N = std::max<std::size_t>(N, static_cast<std::size_t>(std::ceil(std::max(need, 0.0))));
  }
  const MomentTable mt = moments_upto(m, N + f.degree() + 1);
  const HankelApplication app = hankel_apply(mt, f, N);
  AgreementResult res;
  res.n_out = N;
  for (const auto& z : grid) {
    const std::complex<double> I = integral_apply(m, f, z);
    const std::complex<double> H = app.output.evaluate_unchecked(z);
    res.max_deviation = std::max(res.max_deviation, std::abs(H - I) / (1.0 + std::abs(I)));
  }
  return res;
}

DivergenceResult divergence_probe(const Measure& m, const std::function<double(std::size_t)>& a,
                                  const DivergenceOptions& opt) {
  if (opt.levels < opt.first_fit_level + 3) throw ArgumentError("divergence_probe: too few levels for the fit");
  DivergenceResult r;
  MomentGenerator gen(m);
  double sum = 0.0, comp = 0.0;
  std::size_t next = 1;  // next checkpoint 2^j
  for (std::size_t n = 0;; ++n) {
    const double an = a(n);
    if (!(an >= 0.0)) throw PreconditionError("divergence_probe: coefficients must be non-negative");
    const double term = gen.next() * an;
    const double t = sum + term;
    comp += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    if (n == next) {
      r.partial_sums.push_back(sum + comp);
      if (r.partial_sums.size() == static_cast<std::size_t>(opt.levels) + 1) break;
      next *= 2;
    }
  }
  for (std::size_t j = 0; j + 1 < r.partial_sums.size(); ++j)
    r.increments.push_back(r.partial_sums[j + 1] - r.partial_sums[j]);

  std::vector<double> js, ds;
  for (std::size_t j = opt.first_fit_level; j < r.increments.size(); ++j) {
    js.push_back(static_cast<double>(j));
    ds.push_back(r.increments[j]);
  }
  const bool all_zero = std::all_of(ds.begin(), ds.end(), [](double d) { return d == 0.0; });
  // Geometric decay: every increment at most half the previous one.
  r.geometric_decay = true;
  for (std::size_t i = 1; i < ds.size(); ++i)
    if (!(ds[i] <= 0.5 * ds[i - 1])) r.geometric_decay = false;
  if (all_zero) return r;
  const InverseIndexFit fit = fit_inverse_index(js, ds, opt.confidence);
  r.c = fit.c;
  r.c_lower = fit.c_lower;
  r.relative_rms = fit.relative_rms;
  r.divergent = !r.geometric_decay && fit.c_lower > 0.0 && fit.relative_rms < opt.max_relative_rms;
  return r;
}

}  // namespace hankel
