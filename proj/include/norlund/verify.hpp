#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "norlund/rational.hpp"

namespace norlund {

struct VerifyOptions {
  /// Largest degree exercised by the degree-indexed properties. Properties
  /// with super-polynomial cost clamp this further on their own.
  Natural max_n = 12;
  std::uint64_t seed = 1;
  /// Fault injection for the harness itself: perturbs the first derivative
  /// of the Bernoulli kernel jet inside the determinantal route, which must
  /// make the route-equivalence property fail.
  bool corrupt_gamma1 = false;
};

struct PropertyResult {
  std::string name;
  bool passed = true;
  /// First observed mismatch, empty when the property held.
  std::string detail;
};

struct VerifyReport {
  std::vector<PropertyResult> properties;
  bool all_passed() const;
};

/// Runs every cross-verification property. Deterministic for a fixed
/// options value; each property draws from its own seeded generator.
VerifyReport run_verification(const VerifyOptions& opts);

}  // namespace norlund
