#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "starsep/report.hpp"
#include "starsep/ring.hpp"

namespace starsep {

struct VerifyOptions {
  std::string space = "both";  // "cpn", "chn" or "both"
  int dim = 2;
  int order = 6;
  long long L = 3;
  std::uint64_t seed = 1;
  int count = 20;  // random samples where applicable
};

std::vector<std::string> suite_names();

/// Runs a named verification suite. Unknown names throw.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

/// Deterministic random polynomial of total degree <= max_deg with small
/// integer coefficients (shared by the associativity suite and tests).
RingElem seeded_poly(Space s, std::uint64_t& state, int max_deg = 2);

}  // namespace starsep
