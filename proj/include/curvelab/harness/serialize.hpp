#pragma once

#include "curvelab/annihilators.hpp"
#include "curvelab/ring_invariants.hpp"
#include "json.hpp"

namespace curvelab {

using Json = nlohmann::ordered_json;

Json to_json(const InvariantRecord& r);
// Flat object; ideals in their textual form.
Json to_json(const ClassificationRecord& r);
Json to_json(const CaCertificate& c);
// One entry per normalized class: reflexivity, trace, stable annihilator.
Json ideal_classes_json(const NumericalSemigroup& s);

}  // namespace curvelab
