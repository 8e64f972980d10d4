// One line per criterion; exit status 1 when any non-contingent one fails.
#include <cstdio>
#include <cstdlib>

#include "postlie/suite/suite.hpp"

using namespace postlie::suite;

int main() {
  SuiteOptions opt;
  if (const char* b = std::getenv("POSTLIE_BUDGET")) opt.budget = std::strtoull(b, nullptr, 10);
  std::size_t failed = 0;
  run_suite(opt, {}, [&](const CriterionResult& r) {
    const char* tag = "PASS";
    if (r.outcome == Outcome::Fail) tag = "FAIL";
    if (r.outcome == Outcome::Budget) tag = "BUDGET";
    if (r.outcome == Outcome::Contingent) tag = "CONTINGENT";
    std::string title;
    double limit = 0;
    for (const auto& c : criteria()) {
      if (c.id == r.id) {
        title = c.title;
        limit = c.limit_seconds;
      }
    }
    std::printf("criterion %2d: %-10s %s (%.2fs, limit %.0fs)\n", r.id, tag, title.c_str(), r.seconds, limit);
    for (const auto& d : r.details) std::printf("    %s\n", d.c_str());
    if (r.over_time) std::printf("    FAILED: over the time limit\n");
    std::fflush(stdout);
    if (r.outcome == Outcome::Fail) ++failed;
  });
  std::printf("%zu criteria failed\n", failed);
  return failed ? 1 : 0;
}
