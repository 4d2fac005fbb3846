// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include "rankcode/verify.hpp"

#include <cstdio>

int main() {
  rankcode::VerifyOptions opts;
  opts.budget = rankcode::Budget::from_env();
  unsigned failed = 0;
  for (unsigned id = 1; id <= rankcode::kCriterionCount; ++id) {
    const auto c = rankcode::run_criterion(id, opts);
    std::printf("%s %2u %s | expected %s | observed %s | %.3f s (limit %.0f s)\n", c.pass() ? "PASS" : "FAIL", c.id,
                c.name.c_str(), c.expected.c_str(), c.observed.c_str(), c.seconds, c.limit_seconds);
    for (const auto& d : c.details) std::printf("        %s\n", d.c_str());
    if (!c.correct && c.details.empty()) std::printf("        no detail recorded\n");
    if (c.correct && c.seconds > c.limit_seconds) std::printf("        over the time limit\n");
    std::fflush(stdout);
    failed += !c.pass();
  }
  std::printf("%u/%u criteria passed\n", rankcode::kCriterionCount - failed, rankcode::kCriterionCount);
  return failed ? 1 : 0;
}
