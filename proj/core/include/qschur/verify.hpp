#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qschur/json_io.hpp"

namespace qschur {

struct VerifyOptions {
  int n = 3;
  int r = 2;
  /// Module-size cap for the suites quantified over module classes: the
  /// checks run over every pair (or single) whose summed total dimension
  /// stays within this bound.
  int dim_bound = 4;
  /// Case count for the sampled suites.
  int samples = 50;
  /// Seed for the sampled suites; fixed so reports are reproducible.
  std::uint32_t seed = 20240801u;
  int jobs = 1;
  /// Forwarded to the Schur algebra (see SchurOptions).
  std::vector<std::uint32_t> primes;
  std::string cache_dir;
};

struct VerifyFailure {
  std::string inputs;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  std::string suite;
  Json parameters;
  long cases_run = 0;
  std::vector<VerifyFailure> failures;

  bool passed() const { return failures.empty(); }
  Json to_json() const;
};

/// Runs one named check suite.  Suites:
///   serre      - Chevalley generator relations, by closed forms
///   assoc      - associativity of the generic product on upper indices
///   unit       - the diagonal sum is a two-sided unit, both products
///   gamma_hom  - Gamma turns generic extension into the generic product
///   ker_gamma  - Gamma vanishes exactly above the summand bound
///   mult_basis - l-elements multiply like a basis under the generic product
///   zero_schur - q=0 Hall expansion and generic l-table agree with products
///   theta_hom  - Hall coefficients reproduce l-element products at generic q
/// Exhaustive at small sizes, sampled where the spec of the suite says so;
/// cases run in a fixed canonical order and reports are deterministic.
/// Throws UnknownSuite for any other name.
VerifyReport verify_suite(const std::string& name, const VerifyOptions& opt);

}  // namespace qschur
