#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace hankel {

/// Gauss-Legendre rule on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule, nodes ascending. Rules are memoized; the returned
/// reference stays valid for the life of the program.
const GaussRule& gauss_legendre(int n);

/// A node of a one-dimensional rule on (0, h0] expressed in the distance u from the
/// right endpoint of [0,1); `t = 1 - u` is stored for convenience.
struct ShellNode {
  double t;
  double u;
  double w;
};

/// Composite rule on u in [h0*2^{-J-1}, h0]: shell j covers [h0*2^{-j-1}, h0*2^{-j}],
/// j = 0..J, each with `nodes_per_shell` Gauss-Legendre points. Weight is plain du.
std::vector<ShellNode> dyadic_shell_rule(double h0, int shells, int nodes_per_shell);

/// Node of a planar rule for integrals against dA = dx dy / pi.
struct DiscNode {
  std::complex<double> z;
  double w;
};

/// Parameters of the boundary-centred polar scheme used by the disc identities.
struct DiscScheme {
  int angle_panels = 16;     // geometric panels per side toward the tangent directions
  int radial_shells = 40;    // dyadic shells in the distance to z = 1
  int nodes_per_panel = 16;  // Gauss-Legendre points per panel and per shell
};

/// Nodes for integrals over the unit disc against dA/pi, in polar coordinates centred at
/// z = 1: z = 1 - rho e^{i phi}, |phi| < pi/2, 0 < rho < 2 cos phi. Integrands with a
/// 1/(1 - z) singularity are integrable in these coordinates. Weights sum to 1 up to the
/// tiny angular and radial slivers left out at the edges.
std::vector<DiscNode> boundary_polar_nodes(const DiscScheme& scheme = {});

/// Smallest power of two that is >= n (and >= 1).
std::size_t next_pow2(std::size_t n);

}  // namespace hankel
