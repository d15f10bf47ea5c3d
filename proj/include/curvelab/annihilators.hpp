#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "curvelab/ideal.hpp"
#include "curvelab/ring_invariants.hpp"

namespace curvelab {

// Annihilator of the stable endomorphism module of E.
//
// End(E) is E - E. A map factoring through a free module is a sum of
// composites E -> S -> E, i.e. multiplication by an element of
// (S - E) + E = tr(E). So the stable endomorphisms are (E - E) / tr(E) and
// the annihilator is {z in S : z + (E - E) in tr(E)}.
RelativeIdeal stable_annihilator(const RelativeIdeal& e);

// Intersection of stable annihilators over every monomial ideal class.
RelativeIdeal category_annihilator(const NumericalSemigroup& s);
RelativeIdeal category_annihilator(const IdealClassList& classes);

struct DualityClosure {
  bool closed = true;
  // First non-principal reflexive class, in enumeration order, whose
  // canonical dual is not reflexive.
  std::optional<RelativeIdeal> witness;
};

// Shadow of "syzygies without free summands are closed under K - (-)":
// every non-principal reflexive class has a reflexive canonical dual.
DualityClosure duality_closure_shadow(const NumericalSemigroup& s);
DualityClosure duality_closure_shadow(const IdealClassList& classes);

enum class CaStatus { ExactAlmostGorenstein, ExactGorenstein, ExactRegular, Interval };
std::string_view to_string(CaStatus status);

enum class Justification {
  TheoremB,
  GorensteinEquality,
  FiniteGlobalDimension,
  WangConductor,
  ConductorStableAnnihilator,
  SingularLocusUpperBound,
  TheoremAShadow,
};
std::string_view to_string(Justification tag);

struct CaCertificate {
  NumericalSemigroup semigroup;
  RelativeIdeal conductor;
  RelativeIdeal category_annihilator_shadow;
  DualityClosure duality_closure;
  CaStatus status = CaStatus::Interval;
  // Exact statuses: value is set. Interval: lower and upper are set.
  std::optional<RelativeIdeal> value;
  std::optional<RelativeIdeal> lower;
  std::optional<RelativeIdeal> upper;
  std::vector<Justification> justification;
};

// Throws VerificationFailed if an exact status is reached but the computed
// category annihilator disagrees with the conductor.
CaCertificate certify_cohomology_annihilator(const NumericalSemigroup& s);

}  // namespace curvelab
