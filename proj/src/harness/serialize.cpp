#include "curvelab/harness/serialize.hpp"

namespace curvelab {

Json to_json(const InvariantRecord& r) {
  return Json{{"embedding_dimension", r.embedding_dimension},
              {"multiplicity", r.multiplicity},
              {"genus", r.genus},
              {"frobenius", r.frobenius},
              {"pseudo_frobenius", r.pseudo_frobenius},
              {"cm_type", r.cm_type},
              {"symmetric", r.symmetric},
              {"almost_symmetric", r.almost_symmetric},
              {"med", r.med}};
}

Json to_json(const ClassificationRecord& r) {
  return Json{{"gorenstein", r.gorenstein},
              {"almost_gorenstein", r.almost_gorenstein},
              {"nearly_gorenstein", r.nearly_gorenstein},
              {"far_flung_gorenstein", r.far_flung_gorenstein},
              {"canonical_reduction_number", r.canonical_reduction_number},
              {"med", r.med},
              {"canonical_trace", to_text(r.canonical_trace)},
              {"conductor", to_text(r.conductor)}};
}

Json to_json(const CaCertificate& c) {
  Json j{{"semigroup", c.semigroup.to_string()}, {"status", std::string(to_string(c.status))}};
  if (c.value) {
    j["value"] = to_text(*c.value);
    j["value_minimal_generators"] = minimal_generators(*c.value);
  } else {
    j["lower"] = to_text(*c.lower);
    j["upper"] = to_text(*c.upper);
  }
  Json tags = Json::array();
  for (Justification t : c.justification) tags.push_back(std::string(to_string(t)));
  j["justification"] = tags;
  j["duality_closure"] = c.duality_closure.closed;
  if (c.duality_closure.witness) j["duality_witness"] = to_text(*c.duality_closure.witness);
  j["conductor"] = to_text(c.conductor);
  j["category_annihilator_shadow"] = to_text(c.category_annihilator_shadow);
  return j;
}

Json ideal_classes_json(const NumericalSemigroup& s) {
  const IdealClassList list = enumerate_ideal_classes(s);
  Json classes = Json::array();
  for (const auto& e : list.classes) {
    classes.push_back(Json{{"ideal", to_text(e)},
                           {"minimal_generators", minimal_generators(e)},
                           {"reflexive", is_reflexive(e)},
                           {"canonical_dual", to_text(normalize(canonical_dual(e)).first)},
                           {"trace", to_text(trace_ideal(e))},
                           {"stable_annihilator", to_text(stable_annihilator(e))}});
  }
  return Json{{"semigroup", s.to_string()}, {"class_count", list.classes.size()}, {"classes", classes}};
}

}  // namespace curvelab
