#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace qfb::acceptance {

// One verification criterion of the full pipeline. Tolerances are fixed in
// the implementation; the seed only feeds the randomized generators.
struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

std::vector<CriterionResult> run_all(std::uint64_t seed);

// Prints one PASS/FAIL line per criterion plus a summary; returns 0 when
// everything passed, 1 otherwise.
int run_and_report(std::ostream& out, std::uint64_t seed);

}  // namespace qfb::acceptance
