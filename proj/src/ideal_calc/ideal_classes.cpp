#include "curvelab/ideal.hpp"

namespace curvelab {

namespace {

// Decides gaps from the largest down so that every gap g + n it depends on
// is already fixed; excluding before including yields ascending bitmask
// order.
void extend(const NumericalSemigroup& s, const std::vector<Int>& gaps, std::vector<char>& in_set,
            std::vector<char>& chosen, std::ptrdiff_t index, std::vector<std::vector<char>>& out) {
  if (index < 0) {
    out.push_back(chosen);
    return;
  }
  const Int g = gaps[static_cast<std::size_t>(index)];
  extend(s, gaps, in_set, chosen, index - 1, out);

  for (Int n : s.minimal_generators()) {
    const Int h = g + n;
    if (!s.contains(h) && !in_set[static_cast<std::size_t>(h)]) return;
  }
  in_set[static_cast<std::size_t>(g)] = 1;
  chosen[static_cast<std::size_t>(index)] = 1;
  extend(s, gaps, in_set, chosen, index - 1, out);
  chosen[static_cast<std::size_t>(index)] = 0;
  in_set[static_cast<std::size_t>(g)] = 0;
}

}  // namespace

IdealClassList enumerate_ideal_classes(const NumericalSemigroup& s) {
  const std::vector<Int>& gaps = s.gaps();
  std::vector<char> in_set(static_cast<std::size_t>(s.conductor_value()), 0);
  std::vector<char> chosen(gaps.size(), 0);
  std::vector<std::vector<char>> subsets;
  extend(s, gaps, in_set, chosen, static_cast<std::ptrdiff_t>(gaps.size()) - 1, subsets);

  IdealClassList list{s, {}};
  list.classes.reserve(subsets.size());
  std::vector<char> member(static_cast<std::size_t>(s.conductor_value()), 0);
  for (const auto& subset : subsets) {
    std::fill(member.begin(), member.end(), 0);
    for (std::size_t i = 0; i < gaps.size(); ++i) {
      if (subset[i]) member[static_cast<std::size_t>(gaps[i])] = 1;
    }
    list.classes.push_back(RelativeIdeal::from_predicate(s, 0, [&](Int z) {
      return s.contains(z) || (z >= 0 && z < s.conductor_value() && member[static_cast<std::size_t>(z)]);
    }));
  }
  return list;
}

}  // namespace curvelab
