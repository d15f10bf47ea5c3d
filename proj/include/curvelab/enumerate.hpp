#pragma once

#include <functional>
#include <vector>

#include "curvelab/semigroup.hpp"

namespace curvelab {

// Children of S in the semigroup tree: S \ {x} for each minimal generator
// x > frobenius(S), ordered by x.
std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& s);

// Depth-first, children in ascending order of the removed generator.
// Visits every descendant of root with genus exactly target (root included
// when it already has that genus).
void for_each_descendant(const NumericalSemigroup& root, Int target_genus,
                         const std::function<void(const NumericalSemigroup&)>& visit);

std::vector<NumericalSemigroup> enumerate_descendants(const NumericalSemigroup& root, Int target_genus);

// All numerical semigroups of genus exactly g, each once, in tree order.
std::vector<NumericalSemigroup> enumerate_by_genus(Int genus);

// Genus 0, 1, ..., max_genus concatenated; the order every suite runs in.
std::vector<NumericalSemigroup> enumerate_up_to_genus(Int max_genus);

}  // namespace curvelab
