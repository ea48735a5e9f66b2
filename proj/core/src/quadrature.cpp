#include "hankel/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include "hankel/errors.hpp"

namespace hankel {
namespace {

GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[n - 1 - i] = x;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1 || n > 512) throw ArgumentError("gauss_legendre: node count must be in [1, 512]");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(build_rule(n));
  return *slot;
}

std::vector<ShellNode> dyadic_shell_rule(double h0, int shells, int nodes_per_shell) {
  if (!(h0 > 0.0) || shells < 0) throw ArgumentError("dyadic_shell_rule: need h0 > 0 and shells >= 0");
  const GaussRule& g = gauss_legendre(nodes_per_shell);
  std::vector<ShellNode> out;
  out.reserve(static_cast<std::size_t>(shells + 1) * nodes_per_shell);
  for (int j = 0; j <= shells; ++j) {
    const double hi = std::ldexp(h0, -j);
    const double lo = 0.5 * hi;
    const double mid = 0.5 * (hi + lo);
    const double rad = 0.5 * (hi - lo);
    for (int i = 0; i < nodes_per_shell; ++i) {
      const double u = mid + rad * g.nodes[i];
      out.push_back({1.0 - u, u, rad * g.weights[i]});
    }
  }
  return out;
}

std::vector<DiscNode> boundary_polar_nodes(const DiscScheme& scheme) {
  const GaussRule& g = gauss_legendre(scheme.nodes_per_panel);
  const auto radial = dyadic_shell_rule(1.0, scheme.radial_shells, scheme.nodes_per_panel);
  std::vector<DiscNode> out;
  out.reserve(2 * static_cast<std::size_t>(scheme.angle_panels) * g.nodes.size() * radial.size());
  const double half_pi = 0.5 * std::numbers::pi;
  for (int i = 0; i < scheme.angle_panels; ++i) {
    const double a = half_pi * (1.0 - std::ldexp(1.0, -i));
    const double b = half_pi * (1.0 - std::ldexp(1.0, -i - 1));
    const double mid = 0.5 * (a + b);
    const double rad = 0.5 * (b - a);
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
      const double phi = mid + rad * g.nodes[k];
      const double wphi = rad * g.weights[k];
      const double rho_max = 2.0 * std::cos(phi);
      const double jac = rho_max * rho_max * wphi / std::numbers::pi;
      for (double sign : {1.0, -1.0}) {
        const std::complex<double> dir = std::polar(1.0, sign * phi);
        for (const auto& s : radial) {
          out.push_back({1.0 - s.u * rho_max * dir, jac * s.u * s.w});
        }
      }
    }
  }
  return out;
}

std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace hankel
