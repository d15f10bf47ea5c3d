#include "curvelab/harness/context.hpp"

namespace curvelab {

SemigroupContext::SemigroupContext(NumericalSemigroup s)
    : s_(std::move(s)),
      unit_(unit_ideal(s_)),
      normalization_(normalization_ideal(s_)),
      maximal_(maximal_ideal(s_)),
      canonical_(canonical_ideal(s_)),
      conductor_(conductor_ideal(s_)) {}

const InvariantRecord& SemigroupContext::invariants() {
  if (!invariants_) invariants_ = curvelab::invariants(s_);
  return *invariants_;
}

const ClassificationRecord& SemigroupContext::classification() {
  if (!classification_) classification_ = classify(s_);
  return *classification_;
}

Int SemigroupContext::canred() { return classification().canonical_reduction_number; }

const IdealClassList& SemigroupContext::class_list() {
  if (!class_list_) class_list_ = enumerate_ideal_classes(s_);
  return *class_list_;
}

const std::vector<ClassData>& SemigroupContext::classes() {
  if (classes_) return *classes_;
  const auto& list = class_list();
  std::vector<ClassData> out;
  out.reserve(list.classes.size());
  for (const auto& e : list.classes) {
    RelativeIdeal dual = normalize(canonical_dual(e)).first;
    RelativeIdeal rd = ring_dual(e);
    const bool omega_ulrich = is_ulrich(e, canonical_);
    out.push_back(ClassData{e, minimal_generators(e), is_principal(e), is_reflexive(e), dual,
                            is_reflexive(dual), rd, sum(e, rd), stable_annihilator(e), omega_ulrich});
  }
  blowups_.assign(out.size(), std::nullopt);
  bs_.assign(out.size(), std::nullopt);
  classes_ = std::move(out);
  return *classes_;
}

const RelativeIdeal& SemigroupContext::blowup_of(std::size_t i) {
  classes();
  if (!blowups_[i]) blowups_[i] = blowup((*classes_)[i].ideal);
  return *blowups_[i];
}

const RelativeIdeal& SemigroupContext::b_of(std::size_t i) {
  if (!bs_.empty() && bs_[i]) return *bs_[i];
  const RelativeIdeal& b = blowup_of(i);
  bs_[i] = difference(unit_, b);
  return *bs_[i];
}

const RelativeIdeal& SemigroupContext::category_annihilator() {
  if (!category_annihilator_) {
    RelativeIdeal acc = unit_;
    for (const auto& c : classes()) acc = intersection(acc, c.annihilator);
    category_annihilator_ = acc;
  }
  return *category_annihilator_;
}

const DualityClosure& SemigroupContext::duality_closure() {
  if (!duality_closure_) duality_closure_ = duality_closure_shadow(class_list());
  return *duality_closure_;
}

}  // namespace curvelab
