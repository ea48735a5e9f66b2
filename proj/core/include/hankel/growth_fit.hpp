#pragma once

#include <span>

namespace hankel {

/// log R ≈ e_pow x + e_log log x + c over the supplied points.
struct PowerLogFit {
  double e_pow = 0.0;
  double e_log = 0.0;
  double intercept = 0.0;
  double rms = 0.0;
};

/// Least squares for y ≈ e_pow x + e_log log x + c. Needs at least three points with x > 0.
PowerLogFit fit_power_log(std::span<const double> x, std::span<const double> y);

/// Ordinary least-squares slope of y against x.
double ls_slope(std::span<const double> x, std::span<const double> y);

/// y ≈ c / j through the origin, with a one-sided Student-t lower bound on c.
struct InverseIndexFit {
  double c = 0.0;
  double standard_error = 0.0;
  double c_lower = 0.0;
  double relative_rms = 0.0;  // RMS residual divided by mean |y|
};

InverseIndexFit fit_inverse_index(std::span<const double> j, std::span<const double> y, double confidence = 0.95);

}  // namespace hankel
