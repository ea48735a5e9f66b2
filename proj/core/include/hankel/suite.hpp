#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace hankel {

struct SuiteCheck {
  std::string name;
  bool is_inequality = false;  // slack >= floor, otherwise deviation <= tolerance
  double threshold = 0.0;      // tolerance (identities) or floor (inequalities)
  std::size_t instances = 0;
  std::size_t failures = 0;
  double worst = 0.0;          // max deviation or min slack
  std::vector<std::string> diagnostics;  // one line per failing instance
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  std::vector<SuiteCheck> checks;
  bool passed() const;
};

struct SuiteOptions {
  bool identities = true;    // reproducing kernel, pairing, radial (a), radial (b)
  bool inequalities = true;  // Fejér-Riesz, Hardy coefficient, Hardy integral lemma, Vinogradov
  double identity_tolerance = 1e-6;
  double slack_floor = -1e-8;
};

/// Randomized identity and inequality checks, `count` instances each. Every check draws
/// from its own generator seeded from `seed`, so reports are reproducible and a check's
/// instances do not depend on which other checks run.
SuiteReport run_identity_suite(std::uint64_t seed, std::size_t count, const SuiteOptions& opt = {});

}  // namespace hankel
