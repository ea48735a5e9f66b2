#include "hankel/growth_fit.hpp"

#include <Eigen/Dense>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>

#include "hankel/errors.hpp"

namespace hankel {

PowerLogFit fit_power_log(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 3) throw ArgumentError("fit_power_log: need at least three points");
  const Eigen::Index n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (!(x[i] > 0.0)) throw ArgumentError("fit_power_log: x must be positive");
    A(i, 0) = x[i];
    A(i, 1) = std::log(x[i]);
    A(i, 2) = 1.0;
    b(i) = y[i];
  }
  const Eigen::Vector3d c = A.colPivHouseholderQr().solve(b);
  PowerLogFit f{c(0), c(1), c(2), 0.0};
  f.rms = std::sqrt((A * c - b).squaredNorm() / static_cast<double>(n));
  return f;
}

double ls_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw ArgumentError("ls_slope: need at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= x.size();
  my /= y.size();
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw ArgumentError("ls_slope: x values are all equal");
  return sxy / sxx;
}

InverseIndexFit fit_inverse_index(std::span<const double> j, std::span<const double> y, double confidence) {
  if (j.size() != y.size() || j.size() < 3) throw ArgumentError("fit_inverse_index: need at least three points");
  double sxx = 0.0, sxy = 0.0, mean_abs = 0.0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const double x = 1.0 / j[i];
    sxx += x * x;
    sxy += x * y[i];
    mean_abs += std::abs(y[i]);
  }
  mean_abs /= y.size();
  InverseIndexFit f;
  f.c = sxy / sxx;
  double ss = 0.0;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const double r = y[i] - f.c / j[i];
    ss += r * r;
  }
  const double dof = static_cast<double>(j.size() - 1);
  f.standard_error = std::sqrt(ss / dof / sxx);
  const boost::math::students_t dist(dof);
  f.c_lower = f.c - boost::math::quantile(dist, confidence) * f.standard_error;
  f.relative_rms = mean_abs > 0.0 ? std::sqrt(ss / static_cast<double>(j.size())) / mean_abs : 0.0;
  return f;
}

}  // namespace hankel
