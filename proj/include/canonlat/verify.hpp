#pragma once

#include "canonlat/lattice.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace canonlat {

struct SuiteResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t skipped = 0;
  std::vector<std::string> failures;

  bool ok() const { return failures.empty() && passed == checked; }
};

struct VerifyOptions {
  std::uint64_t seed = 7;
  std::size_t samples = 500;  // randomized cases per sampled property
  Index orbit_depth = 3;      // Hurwitz/braid orbits and the θ check
  std::size_t cap = 200000;
};

struct VerifyReport {
  std::string symbol;
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool ok() const;
  /// Deterministic rendering: no timings, fixed key order.
  std::string to_json() const;
};

/// lattice, coxeter, charpoly, signature, braid, quotient, hyperbolic,
/// section6, datum.
const std::vector<std::string>& suite_names();

/// Runs one suite by name, or every suite for "all". Throws
/// PreconditionViolated for an unknown name.
VerifyReport run_verify(const CanonicalLattice& lat, const std::string& suite, const VerifyOptions& opts = {});

SuiteResult verify_suite(const CanonicalLattice& lat, const std::string& name, const VerifyOptions& opts);

}  // namespace canonlat
