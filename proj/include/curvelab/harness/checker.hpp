#pragma once

#include <cstddef>
#include <deque>
#include <string>
#include <string_view>
#include <vector>

#include "curvelab/ideal.hpp"

namespace curvelab {

// A counterexample or an informational finding, in replayable form.
struct Witness {
  std::string semigroup;
  std::vector<std::string> ideals;
  std::string check;
  std::string details;
};

struct CheckTally {
  std::string check;
  std::size_t executed = 0;
  std::size_t violations = 0;
  std::size_t informational = 0;
};

// Everything one suite run recorded against one semigroup (or, for
// range-level checks, against one genus).
struct SemigroupOutcome {
  std::string semigroup;
  bool is_semigroup = true;
  std::deque<CheckTally> tallies;
  std::vector<Witness> violations;
  std::vector<Witness> informational;

  std::size_t checks_executed() const;
  std::size_t violation_count() const;
  std::size_t informational_count() const;
};

// Witnesses kept per check id; further findings are only counted.
inline constexpr std::size_t kWitnessesPerCheck = 8;

struct Finding {
  std::vector<RelativeIdeal> ideals;
  std::string details;
};

class Checker {
 public:
  explicit Checker(SemigroupOutcome& out) : out_(out) {}

  // Switches the prefix prepended to check ids ("suite.").
  void set_suite(std::string_view suite) { prefix_ = std::string(suite) + "."; }

  // Stable handle for a check id; cache it outside hot loops.
  CheckTally& tally(std::string_view check);

  // `describe` is only called on failure and returns a Finding.
  template <class Describe>
  bool expect(CheckTally& t, bool ok, Describe&& describe) {
    ++t.executed;
    if (!ok && ++t.violations <= kWitnessesPerCheck) record(t, out_.violations, describe());
    return ok;
  }
  template <class Describe>
  bool expect(std::string_view check, bool ok, Describe&& describe) {
    return expect(tally(check), ok, describe);
  }

  // An observation outside any proven statement; never a violation.
  template <class Describe>
  void inform(CheckTally& t, bool finding, Describe&& describe) {
    ++t.executed;
    if (finding && ++t.informational <= kWitnessesPerCheck) record(t, out_.informational, describe());
  }
  template <class Describe>
  void inform(std::string_view check, bool finding, Describe&& describe) {
    inform(tally(check), finding, describe);
  }

  bool clean() const { return out_.violations.empty(); }

 private:
  void record(const CheckTally& t, std::vector<Witness>& into, Finding f);

  SemigroupOutcome& out_;
  std::string prefix_;
};

}  // namespace curvelab
