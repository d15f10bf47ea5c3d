#include "curvelab/harness/checker.hpp"

#include <algorithm>

namespace curvelab {

std::size_t SemigroupOutcome::checks_executed() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.executed;
  return n;
}

std::size_t SemigroupOutcome::violation_count() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.violations;
  return n;
}

std::size_t SemigroupOutcome::informational_count() const {
  std::size_t n = 0;
  for (const auto& t : tallies) n += t.informational;
  return n;
}

CheckTally& Checker::tally(std::string_view check) {
  const std::string id = prefix_ + std::string(check);
  auto it = std::find_if(out_.tallies.begin(), out_.tallies.end(),
                         [&](const CheckTally& t) { return t.check == id; });
  if (it != out_.tallies.end()) return *it;
  out_.tallies.push_back(CheckTally{id});
  return out_.tallies.back();
}

void Checker::record(const CheckTally& t, std::vector<Witness>& into, Finding f) {
  Witness w{out_.semigroup, {}, t.check, std::move(f.details)};
  for (const auto& e : f.ideals) w.ideals.push_back(to_text(e));
  into.push_back(std::move(w));
}

}  // namespace curvelab
