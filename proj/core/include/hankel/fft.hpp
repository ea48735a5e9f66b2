#pragma once

// Thin FFT layer over FFTW. Plans are cached per size and shared across threads.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hankel::fft {

/// out[n] = Σ_{k<a.size()} mu[n+k] a[k] for n = 0..n_out, via zero-padded real FFTs.
/// Requires mu.size() >= n_out + a.size().
std::vector<double> correlate(std::span<const double> mu, std::span<const double> a, std::size_t n_out);

/// Samples of Σ_k c_k r^k e^{ikθ} at θ_j = 2πj/n, j = 0..n-1 (coefficients aliased mod n).
std::vector<std::complex<double>> sample_circle(std::span<const std::complex<double>> c, double r, std::size_t n);

}  // namespace hankel::fft
