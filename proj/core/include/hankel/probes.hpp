#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hankel/measure.hpp"
#include "hankel/spaces.hpp"
#include "hankel/test_functions.hpp"

namespace hankel {

enum class Verdict { Bounded, LogDivergent, PowerDivergent, Indeterminate };

std::string to_string(Verdict v);

/// Frozen decision constants for run_probe. All fits use the last `window` grid points.
///  - power-divergent: joint-fit exponent e_pow > power_exponent
///  - bounded:         e_pow < bounded_exponent and growth spread < max_spread
///  - log-divergent:   e_pow <= power_exponent, spread >= max_spread, R strictly increasing
///                     over the window and positive log coefficient e_log
///  - indeterminate:   anything else
struct VerdictThresholds {
  double bounded_exponent = 0.05;
  double power_exponent = 0.15;
  double max_spread = 1.5;
  std::size_t window = 10;
};

/// How a norm is obtained. `Series` is the coefficient side: the Parseval series of the
/// closed form for inputs, the coefficient functional for outputs. `Quadrature` samples
/// on circles and integrates radially.
enum class NormRoute { Series, Quadrature };

std::string to_string(NormRoute r);

struct ProbeSpec {
  Measure measure;
  SpaceSpec domain;
  SpaceSpec codomain;
  FamilySpec family;
  std::vector<double> b_grid;  // empty means default_b_grid()
  NormRoute input_route = NormRoute::Series;
  NormRoute output_route = NormRoute::Series;
  double truncation_factor = 50.0;  // K(b) = ceil(factor/(1-b))
  double output_factor = 50.0;      // N_out(b) = ceil(factor/(1-b))
  QuadratureScheme quadrature{};
  VerdictThresholds thresholds{};
  unsigned threads = 1;  // per-b parallelism; results do not depend on it

  /// Throws ArgumentError if the family does not match the domain space, or if a Series
  /// route is requested where no coefficient formula exists.
  void validate() const;
};

/// b_j = 1 - 2^{-j}, j = jmin..jmax.
std::vector<double> dyadic_b_grid(int jmin = 2, int jmax = 14);

struct ProbeRow {
  double b = 0.0;
  std::size_t K = 0;
  std::size_t n_out = 0;
  double input_norm = 0.0;
  double output_norm = 0.0;
  double ratio = 0.0;
  /// Estimated share of the output functional beyond N_out that was added back (Series
  /// output route only): power-law extrapolation of the last octave of coefficients.
  double tail_fraction = 0.0;
  double tail_decay = 0.0;  // fitted decay exponent κ of the output coefficients
  bool tail_divergent = false;  // κ too small for the functional to converge
};

struct ProbeReport {
  ProbeSpec spec;
  std::vector<ProbeRow> rows;
  double e_pow = 0.0;           // joint fit log R ≈ e_pow x + e_log log x + c, x = log(1/(1-b))
  double e_log = 0.0;
  double slope_x = 0.0;         // plain least-squares slope of log R against x
  double slope_logx = 0.0;      // plain least-squares slope of log R against log x
  double growth_spread = 0.0;   // max over i < j in the window of R_j/R_i
  bool increasing = false;      // R strictly increasing over the window
  double log_band = 0.0;        // max/min of R/x over the last six grid points
  Verdict verdict = Verdict::Indeterminate;
};

ProbeReport run_probe(const ProbeSpec& spec);

/// Applies the thresholds to a finished set of rows (fills every fitted field).
void assign_verdict(ProbeReport& report);

}  // namespace hankel
