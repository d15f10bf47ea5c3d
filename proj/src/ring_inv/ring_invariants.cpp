#include "curvelab/ring_invariants.hpp"

#include "curvelab/error.hpp"

namespace curvelab {

RelativeIdeal conductor_ideal(const NumericalSemigroup& s) {
  return normalization_ideal(s).translate(s.conductor_value());
}

Int principal_reduction_number(const RelativeIdeal& e) {
  const Int bound = e.parent().multiplicity();
  RelativeIdeal power = unit_ideal(e.parent());
  for (Int r = 0; r <= bound; ++r) {
    RelativeIdeal next = sum(power, e);
    if (next == power.translate(e.min())) return r;
    power = std::move(next);
  }
  throw Error(Errc::InternalBoundExceeded, "reduction number of " + to_text(e) + " exceeds multiplicity");
}

RelativeIdeal blowup(const RelativeIdeal& e) {
  const RelativeIdeal power = n_fold_sum(e, principal_reduction_number(e));
  return difference(power, power);
}

RelativeIdeal b_ideal(const RelativeIdeal& e) { return difference(unit_ideal(e.parent()), blowup(e)); }

bool is_ulrich(const RelativeIdeal& e, const RelativeIdeal& i) {
  require_same_parent(e, i);
  return is_translate(e, sum(i, e)).has_value();
}

Int canonical_reduction_number(const NumericalSemigroup& s) {
  const RelativeIdeal k = canonical_ideal(s);
  const Int bound = s.multiplicity() - 1;
  RelativeIdeal power = unit_ideal(s);
  for (Int n = 0; n <= bound; ++n) {
    RelativeIdeal next = sum(power, k);
    if (is_translate(power, next)) return n;
    power = std::move(next);
  }
  throw Error(Errc::InternalBoundExceeded,
              "canonical reduction number of <" + s.to_string() + "> exceeds multiplicity - 1");
}

ClassificationRecord classify(const NumericalSemigroup& s) {
  const RelativeIdeal k = canonical_ideal(s);
  RelativeIdeal trace = trace_ideal(k);
  RelativeIdeal conductor = conductor_ideal(s);
  const InvariantRecord inv = invariants(s);
  ClassificationRecord r{
      .gorenstein = inv.symmetric,
      .almost_gorenstein = inv.almost_symmetric,
      .nearly_gorenstein = maximal_ideal(s).is_subset_of(trace),
      .far_flung_gorenstein = trace == conductor,
      .canonical_reduction_number = canonical_reduction_number(s),
      .med = inv.med,
      .canonical_trace = std::move(trace),
      .conductor = std::move(conductor),
  };
  return r;
}

}  // namespace curvelab
