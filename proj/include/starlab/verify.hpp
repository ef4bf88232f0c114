#pragma once

// Seeded invariant harness behind `starlab verify`. Every trial draws from its
// own named substream (seed -> suite -> ring -> property -> trial index), so
// adding a suite or property leaves the samples of the others untouched.

#include <cstdint>
#include <string>
#include <vector>

#include "starlab/scalar.hpp"

namespace starlab {

struct VerifyConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::size_t max_dim = 4;  // at most 6
  std::vector<RingSpec> rings{RingSpec::gaussian(), RingSpec::prime(2), RingSpec::prime(3),
                              RingSpec::prime(5)};
  std::vector<std::string> suites{"inverses", "orders", "decompositions", "finite-oracle"};
};

const std::vector<std::string>& known_suites();
/// Throws ParseError on unknown suites, trials = 0, max_dim outside 1..6.
void validate(const VerifyConfig& config);

struct PropertyResult {
  std::string suite;
  std::string property;
  std::string ring;
  std::size_t trials = 0;
  std::size_t applicable = 0;
  std::size_t failures = 0;
  std::string first_failure;
};

struct VerifyReport {
  VerifyConfig config;
  std::vector<PropertyResult> results;

  std::size_t failures() const;
  bool ok() const { return failures() == 0; }
  /// Deterministic text: identical config gives identical bytes.
  std::string transcript() const;
};

VerifyReport run_verify(const VerifyConfig& config);

}  // namespace starlab
