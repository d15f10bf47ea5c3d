#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curvelab/harness/checker.hpp"
#include "curvelab/harness/suites.hpp"
#include "curvelab/semigroup.hpp"

namespace curvelab {

struct SuiteReport {
  std::string suite;
  Int genus_lo = 0;
  Int genus_hi = 0;
  std::size_t semigroups_checked = 0;
  std::size_t checks_executed = 0;
  std::size_t violation_count = 0;
  std::size_t informational_count = 0;
  std::vector<Witness> violations;
  std::vector<Witness> informational;
  // Range-level outcomes first (one per genus), then one per semigroup in
  // enumeration order.
  std::vector<SemigroupOutcome> outcomes;
  double wall_time_seconds = 0.0;
  bool fail_fast_stopped = false;

  bool passed() const { return violation_count == 0; }
};

// `suite` is a registry id or "all". Results do not depend on `jobs`.
// With `fail_fast` the report is cut after the first semigroup (in
// enumeration order) that has a violation.
SuiteReport run_suite(std::string_view suite, Int genus_max, unsigned jobs = 1, bool fail_fast = false);

// Same, for an explicit list of suites reported under `name`.
SuiteReport run_suites(std::string name, const std::vector<const Suite*>& suites, Int genus_max, unsigned jobs,
                       bool fail_fast);

// Runs the suite's per-semigroup checks on one semigroup; used to replay
// a witness.
SemigroupOutcome run_suite_on(std::string_view suite, const NumericalSemigroup& s);

// Re-runs the witness's suite on its semigroup and reports whether the
// same check fails again.
bool replay(const Witness& w);

}  // namespace curvelab
