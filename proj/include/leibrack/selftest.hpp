#pragma once

#include "leibrack/json_io.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace leibrack {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  Json details;
  double seconds = 0;
  double limit_seconds = 0;
};

/// Acceptance criteria 1 to 8, in order. Determinism (9) is checked by
/// callers comparing two reports.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed);

/// Report object for a run; timings only when requested, so that equal
/// seeds give byte-identical output.
Json selftest_report(const std::vector<CriterionResult>& results, std::uint64_t seed, bool timings);

}  // namespace leibrack
