#pragma once

#include <string>
#include <vector>

namespace logenc::bench {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
  std::string records_jsonl;  // raw records, for the determinism check
};

/// Statistical quality sweeps. Thresholds and seeds are pinned in code.
CriterionResult maxcut_quality();     // G(20, {0.3,0.4,0.5}) vs brute force
CriterionResult partition_quality();  // 16 numbers, median p_norm
CriterionResult clique_quality();     // G(12, 0.5), best-of-20 vs exact
CriterionResult mwis_quality();       // G(16, 0.3), mean percent of optimal

/// Re-runs the four sweeps and compares the JSON-lines output byte for
/// byte against `first_pass` (which must hold results of the four quality
/// criteria in order).
CriterionResult determinism_check(
    const std::vector<CriterionResult>& first_pass);

/// Runs all of the above in order; the determinism check reuses the four
/// quality results.
std::vector<CriterionResult> run_quality_suite();

std::string format_result_line(const CriterionResult& r);

}  // namespace logenc::bench
