#pragma once

#include <functional>
#include <string>
#include <vector>

#include "postlie/io/io.hpp"
#include "postlie/poly/groebner.hpp"

namespace postlie::suite {

struct Criterion {
  int id = 0;
  std::string title;
  double limit_seconds = 0;
  bool contingent = false;
};
const std::vector<Criterion>& criteria();

enum class Outcome { Pass, Fail, Budget, Contingent };
const char* to_string(Outcome o);

struct CriterionResult {
  int id = 0;
  Outcome outcome = Outcome::Fail;
  std::vector<std::string> details;  // one line per check, deterministic
  double seconds = 0;
  bool over_time = false;
};

struct SuiteOptions {
  std::size_t budget = poly::kDefaultBudget;
};

CriterionResult run_criterion(int id, const SuiteOptions& opt);

struct SuiteReport {
  std::vector<CriterionResult> results;
  /// No non-contingent criterion failed.
  [[nodiscard]] bool ok() const;
};

/// Runs `ids` (all criteria when empty); `progress` sees each result as it
/// finishes.
SuiteReport run_suite(const SuiteOptions& opt, const std::vector<int>& ids = {},
                      const std::function<void(const CriterionResult&)>& progress = {});

/// Structured form without timings, so reruns compare byte for byte.
io::Json to_json(const SuiteReport& r, const SuiteOptions& opt);

}  // namespace postlie::suite
