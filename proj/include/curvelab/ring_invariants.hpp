#pragma once

#include "curvelab/ideal.hpp"
#include "curvelab/semigroup.hpp"

namespace curvelab {

// {z >= frobenius + 1} = S - N; the whole ring when S is regular.
RelativeIdeal conductor_ideal(const NumericalSemigroup& s);

// Least r >= 0 with (r+1)E = min(E) + rE; throws InternalBoundExceeded past
// the multiplicity.
Int principal_reduction_number(const RelativeIdeal& e);

// B(E) = union of nE - nE. Once (r+1)E = min(E) + rE every later colon
// nE - nE equals rE - rE, so the union is read off at r.
RelativeIdeal blowup(const RelativeIdeal& e);

// b(E) = S - B(E), the conductor of S into the blowup.
RelativeIdeal b_ideal(const RelativeIdeal& e);

// I + E is a translate of E.
bool is_ulrich(const RelativeIdeal& e, const RelativeIdeal& i);

// Least n >= 0 with (n+1)K a translate of nK for the monomial canonical
// ideal K. Zero when K is principal.
Int canonical_reduction_number(const NumericalSemigroup& s);

struct ClassificationRecord {
  bool gorenstein = true;
  bool almost_gorenstein = true;
  bool nearly_gorenstein = true;
  bool far_flung_gorenstein = false;
  Int canonical_reduction_number = 0;
  bool med = true;
  RelativeIdeal canonical_trace;
  RelativeIdeal conductor;
};

ClassificationRecord classify(const NumericalSemigroup& s);

}  // namespace curvelab
