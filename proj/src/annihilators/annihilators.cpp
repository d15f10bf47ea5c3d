#include "curvelab/annihilators.hpp"

#include "curvelab/error.hpp"

namespace curvelab {

RelativeIdeal stable_annihilator(const RelativeIdeal& e) {
  const RelativeIdeal endo = difference(e, e);
  const RelativeIdeal unit = unit_ideal(e.parent());
  return intersection(unit, difference(trace_ideal(e), endo));
}

RelativeIdeal category_annihilator(const IdealClassList& classes) {
  RelativeIdeal acc = unit_ideal(classes.parent);
  for (const auto& e : classes.classes) acc = intersection(acc, stable_annihilator(e));
  return acc;
}

RelativeIdeal category_annihilator(const NumericalSemigroup& s) {
  return category_annihilator(enumerate_ideal_classes(s));
}

DualityClosure duality_closure_shadow(const IdealClassList& classes) {
  for (const auto& e : classes.classes) {
    if (is_principal(e) || !is_reflexive(e)) continue;
    if (!is_reflexive(canonical_dual(e))) return DualityClosure{false, e};
  }
  return DualityClosure{};
}

DualityClosure duality_closure_shadow(const NumericalSemigroup& s) {
  return duality_closure_shadow(enumerate_ideal_classes(s));
}

std::string_view to_string(CaStatus status) {
  switch (status) {
    case CaStatus::ExactAlmostGorenstein: return "ExactAlmostGorenstein";
    case CaStatus::ExactGorenstein: return "ExactGorenstein";
    case CaStatus::ExactRegular: return "ExactRegular";
    case CaStatus::Interval: return "Interval";
  }
  return "Interval";
}

std::string_view to_string(Justification tag) {
  switch (tag) {
    case Justification::TheoremB: return "TheoremB";
    case Justification::GorensteinEquality: return "GorensteinEquality";
    case Justification::FiniteGlobalDimension: return "FiniteGlobalDimension";
    case Justification::WangConductor: return "WangConductor";
    case Justification::ConductorStableAnnihilator: return "ConductorStableAnnihilator";
    case Justification::SingularLocusUpperBound: return "SingularLocusUpperBound";
    case Justification::TheoremAShadow: return "TheoremAShadow";
  }
  return "";
}

CaCertificate certify_cohomology_annihilator(const NumericalSemigroup& s) {
  const IdealClassList classes = enumerate_ideal_classes(s);
  CaCertificate cert{
      .semigroup = s,
      .conductor = conductor_ideal(s),
      .category_annihilator_shadow = category_annihilator(classes),
      .duality_closure = duality_closure_shadow(classes),
      .status = CaStatus::Interval,
      .value = std::nullopt,
      .lower = std::nullopt,
      .upper = std::nullopt,
      .justification = {},
  };
  if (!cert.conductor.is_subset_of(cert.category_annihilator_shadow)) {
    throw Error(Errc::VerificationFailed, "conductor not inside category annihilator for <" + s.to_string() + ">");
  }

  const InvariantRecord inv = invariants(s);
  auto exact = [&](CaStatus status, std::vector<Justification> tags) {
    if (!(cert.category_annihilator_shadow == cert.conductor)) {
      throw Error(Errc::VerificationFailed,
                  "category annihilator " + to_text(cert.category_annihilator_shadow) + " differs from conductor " +
                      to_text(cert.conductor) + " for <" + s.to_string() + ">");
    }
    cert.status = status;
    cert.value = cert.conductor;
    cert.justification = std::move(tags);
  };

  if (s.is_regular()) {
    exact(CaStatus::ExactRegular, {Justification::FiniteGlobalDimension});
  } else if (inv.symmetric) {
    exact(CaStatus::ExactGorenstein, {Justification::GorensteinEquality, Justification::WangConductor,
                                      Justification::ConductorStableAnnihilator});
  } else if (inv.almost_symmetric) {
    exact(CaStatus::ExactAlmostGorenstein,
          {Justification::TheoremB, Justification::WangConductor, Justification::ConductorStableAnnihilator});
  } else {
    cert.status = CaStatus::Interval;
    cert.lower = cert.conductor;
    cert.upper = maximal_ideal(s);
    cert.justification = {Justification::WangConductor, Justification::SingularLocusUpperBound};
    if (cert.duality_closure.closed) cert.justification.push_back(Justification::TheoremAShadow);
  }
  return cert;
}

}  // namespace curvelab
