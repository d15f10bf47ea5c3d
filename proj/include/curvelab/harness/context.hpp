#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "curvelab/annihilators.hpp"
#include "curvelab/ring_invariants.hpp"

namespace curvelab {

// Everything the suites ask about one normalized ideal class.
struct ClassData {
  RelativeIdeal ideal;
  std::vector<Int> generators;
  bool principal = false;
  bool reflexive = false;
  RelativeIdeal dual;  // normalized K - E
  bool dual_reflexive = false;
  RelativeIdeal ring_dual;
  RelativeIdeal trace;
  RelativeIdeal annihilator;
  bool omega_ulrich = false;
};

// Lazily computed facts about one semigroup, shared by every suite that
// runs on it. Not thread safe; each worker owns its contexts.
class SemigroupContext {
 public:
  explicit SemigroupContext(NumericalSemigroup s);

  const NumericalSemigroup& semigroup() const noexcept { return s_; }
  const InvariantRecord& invariants();
  const ClassificationRecord& classification();
  Int canred();

  const RelativeIdeal& unit() const noexcept { return unit_; }
  const RelativeIdeal& normalization() const noexcept { return normalization_; }
  const RelativeIdeal& maximal() const noexcept { return maximal_; }
  const RelativeIdeal& canonical() const noexcept { return canonical_; }
  const RelativeIdeal& conductor() const noexcept { return conductor_; }

  const IdealClassList& class_list();
  const std::vector<ClassData>& classes();
  const RelativeIdeal& blowup_of(std::size_t i);
  const RelativeIdeal& b_of(std::size_t i);
  const RelativeIdeal& category_annihilator();
  const DualityClosure& duality_closure();

 private:
  NumericalSemigroup s_;
  RelativeIdeal unit_;
  RelativeIdeal normalization_;
  RelativeIdeal maximal_;
  RelativeIdeal canonical_;
  RelativeIdeal conductor_;
  std::optional<InvariantRecord> invariants_;
  std::optional<ClassificationRecord> classification_;
  std::optional<IdealClassList> class_list_;
  std::optional<std::vector<ClassData>> classes_;
  std::vector<std::optional<RelativeIdeal>> blowups_;
  std::vector<std::optional<RelativeIdeal>> bs_;
  std::optional<RelativeIdeal> category_annihilator_;
  std::optional<DualityClosure> duality_closure_;
};

}  // namespace curvelab
