#pragma once

#include "rankcode/error.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rankcode {

struct Check {
  unsigned id = 0;
  std::string name;
  std::string expected;
  std::string observed;
  bool correct = false;
  double seconds = 0;
  double limit_seconds = 0;
  std::vector<std::string> details;

  bool pass() const { return correct && seconds <= limit_seconds; }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  Budget budget;
};

constexpr unsigned kCriterionCount = 15;

// Runs one numbered acceptance check (1..15). Exceptions inside a check are
// reported as a failed check rather than propagated.
Check run_criterion(unsigned id, const VerifyOptions& opts = {});

// chapter1 | counting | covering | circulant | mrd | fuzzy | mcode | all
const std::vector<std::string>& suite_names();
std::vector<unsigned> suite_members(const std::string& suite);

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;
  bool all_pass() const;
};

SuiteReport run_suite(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace rankcode
