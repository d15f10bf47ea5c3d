#include "curvelab/enumerate.hpp"

namespace curvelab {

std::vector<NumericalSemigroup> tree_children(const NumericalSemigroup& s) {
  std::vector<NumericalSemigroup> out;
  for (Int x : s.minimal_generators()) {
    if (x > s.frobenius()) out.push_back(s.remove_generator(x));
  }
  return out;
}

void for_each_descendant(const NumericalSemigroup& root, Int target_genus,
                         const std::function<void(const NumericalSemigroup&)>& visit) {
  if (root.genus() > target_genus) return;
  if (root.genus() == target_genus) {
    visit(root);
    return;
  }
  for (const auto& child : tree_children(root)) for_each_descendant(child, target_genus, visit);
}

std::vector<NumericalSemigroup> enumerate_descendants(const NumericalSemigroup& root, Int target_genus) {
  std::vector<NumericalSemigroup> out;
  for_each_descendant(root, target_genus, [&](const NumericalSemigroup& s) { out.push_back(s); });
  return out;
}

std::vector<NumericalSemigroup> enumerate_by_genus(Int genus) {
  if (genus < 0) return {};
  return enumerate_descendants(NumericalSemigroup(), genus);
}

std::vector<NumericalSemigroup> enumerate_up_to_genus(Int max_genus) {
  std::vector<std::vector<NumericalSemigroup>> by_genus(max_genus < 0 ? 0 : static_cast<std::size_t>(max_genus + 1));
  std::function<void(const NumericalSemigroup&)> walk = [&](const NumericalSemigroup& s) {
    by_genus[static_cast<std::size_t>(s.genus())].push_back(s);
    if (s.genus() < max_genus) {
      for (const auto& child : tree_children(s)) walk(child);
    }
  };
  if (max_genus >= 0) walk(NumericalSemigroup());
  std::vector<NumericalSemigroup> out;
  for (auto& level : by_genus) {
    for (auto& s : level) out.push_back(std::move(s));
  }
  return out;
}

}  // namespace curvelab
