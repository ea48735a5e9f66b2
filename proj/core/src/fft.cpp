#include "hankel/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "hankel/errors.hpp"
#include "hankel/quadrature.hpp"

namespace hankel::fft {
namespace {

struct FftwFree {
  void operator()(void* p) const noexcept { fftw_free(p); }
};
template <class T>
using Buffer = std::unique_ptr<T[], FftwFree>;

template <class T>
Buffer<T> allocate(std::size_t n) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * n));
  if (!p) throw std::bad_alloc();
  return Buffer<T>(p);
}

enum class Kind { R2C, C2R, Backward };

// FFTW_ESTIMATE keeps plan selection independent of timing, so results are reproducible
// bit for bit across runs.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }
  fftw_plan get(Kind kind, std::size_t n) {
    std::lock_guard lock(mutex_);
    auto it = plans_.find({kind, n});
    if (it != plans_.end()) return it->second;
    const int size = static_cast<int>(n);
    fftw_plan plan = nullptr;
    switch (kind) {
      case Kind::R2C: {
        auto in = allocate<double>(n);
        auto out = allocate<fftw_complex>(n / 2 + 1);
        plan = fftw_plan_dft_r2c_1d(size, in.get(), out.get(), FFTW_ESTIMATE);
        break;
      }
      case Kind::C2R: {
        auto in = allocate<fftw_complex>(n / 2 + 1);
        auto out = allocate<double>(n);
        plan = fftw_plan_dft_c2r_1d(size, in.get(), out.get(), FFTW_ESTIMATE);
        break;
      }
      case Kind::Backward: {
        auto in = allocate<fftw_complex>(n);
        auto out = allocate<fftw_complex>(n);
        plan = fftw_plan_dft_1d(size, in.get(), out.get(), FFTW_BACKWARD, FFTW_ESTIMATE);
        break;
      }
    }
    if (!plan) throw std::runtime_error("FFTW planning failed");
    plans_.emplace(std::make_pair(kind, n), plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<Kind, std::size_t>, fftw_plan> plans_;
};

PlanCache& plans() {
  static PlanCache cache;
  return cache;
}

}  // namespace

std::vector<double> correlate(std::span<const double> mu, std::span<const double> a, std::size_t n_out) {
  if (a.empty()) return std::vector<double>(n_out + 1, 0.0);
  const std::size_t K = a.size() - 1;
  if (mu.size() < n_out + K + 1) throw ArgumentError("correlate: moment sequence too short");
  // Circular convolution of mu[0..n_out+K] with reversed a; entries K..n_out+K are
  // free of wrap-around when the transform length is at least n_out + K + 1.
  const std::size_t P = next_pow2(n_out + K + 1);
  auto x = allocate<double>(P);
  auto y = allocate<double>(P);
  auto X = allocate<fftw_complex>(P / 2 + 1);
  auto Y = allocate<fftw_complex>(P / 2 + 1);
  std::memset(x.get(), 0, sizeof(double) * P);
  std::memset(y.get(), 0, sizeof(double) * P);
  for (std::size_t i = 0; i <= n_out + K; ++i) x[i] = mu[i];
  for (std::size_t k = 0; k <= K; ++k) y[K - k] = a[k];
  fftw_plan fwd = plans().get(Kind::R2C, P);
  fftw_plan inv = plans().get(Kind::C2R, P);
  fftw_execute_dft_r2c(fwd, x.get(), X.get());
  fftw_execute_dft_r2c(fwd, y.get(), Y.get());
  for (std::size_t i = 0; i < P / 2 + 1; ++i) {
    const double re = X[i][0] * Y[i][0] - X[i][1] * Y[i][1];
    const double im = X[i][0] * Y[i][1] + X[i][1] * Y[i][0];
    X[i][0] = re;
    X[i][1] = im;
  }
  fftw_execute_dft_c2r(inv, X.get(), x.get());
  std::vector<double> out(n_out + 1);
  const double scale = 1.0 / static_cast<double>(P);
  for (std::size_t n = 0; n <= n_out; ++n) out[n] = x[n + K] * scale;
  return out;
}

std::vector<std::complex<double>> sample_circle(std::span<const std::complex<double>> c, double r, std::size_t n) {
  if (n == 0) throw ArgumentError("sample_circle: need at least one point");
  auto in = allocate<fftw_complex>(n);
  auto out = allocate<fftw_complex>(n);
  std::memset(in.get(), 0, sizeof(fftw_complex) * n);
  double rk = 1.0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k % 64 == 0) rk = std::pow(r, static_cast<double>(k));
    const std::complex<double> v = c[k] * rk;
    in[k % n][0] += v.real();
    in[k % n][1] += v.imag();
    rk *= r;
  }
  fftw_execute_dft(plans().get(Kind::Backward, n), in.get(), out.get());
  std::vector<std::complex<double>> s(n);
  for (std::size_t j = 0; j < n; ++j) s[j] = {out[j][0], out[j][1]};
  return s;
}

}  // namespace hankel::fft
