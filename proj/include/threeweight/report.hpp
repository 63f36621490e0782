#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "threeweight/errors.hpp"

namespace threeweight {

struct AnalyzeOptions {
  std::int64_t pair_budget = 531441;   // 3^12 pairs for the full sweep
  std::int64_t dual_n_budget = 20000;  // cap for the O(n^2) dual searches
  bool brute_force_only = false;
  bool skip_dual = false;
  bool with_timings = false;  // timings are kept out of the canonical body
  int threads = 0;
};

struct AnalysisOutcome {
  nlohmann::ordered_json report;
  /// 0 = verified, 2 = a result contradicts the closed forms, 3 = parts
  /// were skipped for budget reasons.
  int exit_code = 0;
  std::optional<bool> match;
};

/// Full pipeline: validate, build the tower, code polynomials, enumerated
/// and predicted distributions, sum value distribution and moments,
/// intersection-set counts, dual certification (p = 3, k even, e odd).
/// Throws Error on invalid parameters, an unsupported regime without the
/// brute-force flag, or an internal consistency failure; budget limits on
/// individual stages degrade the report instead (exit code 3).
AnalysisOutcome run_analysis(int p, int m, int k, const AnalyzeOptions& opt = {});

nlohmann::ordered_json error_object(const Error& e);

/// Exit code for an error escaping the pipeline: 1 for parameter/usage
/// problems, 3 for budget, 2 for anything indicating a broken invariant.
int exit_code_for(const Error& e);

}  // namespace threeweight
