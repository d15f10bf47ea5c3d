#include "curvelab/semigroup.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>

#include "curvelab/error.hpp"

namespace curvelab {

namespace {

// Least member of each residue class mod gens.front(); gens sorted, positive.
std::vector<Int> apery_by_shortest_paths(const std::vector<Int>& gens) {
  const Int m = gens.front();
  constexpr Int kUnreached = std::numeric_limits<Int>::max();
  std::vector<Int> dist(static_cast<std::size_t>(m), kUnreached);
  using Item = std::pair<Int, Int>;  // (value, residue)
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[0] = 0;
  queue.emplace(0, 0);
  while (!queue.empty()) {
    auto [value, residue] = queue.top();
    queue.pop();
    if (value != dist[static_cast<std::size_t>(residue)]) continue;
    for (std::size_t i = 1; i < gens.size(); ++i) {
      const Int next = value + gens[i];
      const auto r = static_cast<std::size_t>(next % m);
      if (next < dist[r]) {
        dist[r] = next;
        queue.emplace(next, static_cast<Int>(r));
      }
    }
  }
  return dist;
}

}  // namespace

NumericalSemigroup::NumericalSemigroup()
    : d_(std::make_shared<const Data>(Data{{1}, -1, {}, BitWindow(0)})) {}

NumericalSemigroup NumericalSemigroup::from_generators(std::span<const Int> input) {
  if (input.empty()) throw Error(Errc::EmptyGenerators, "generator list is empty");
  std::vector<Int> gens(input.begin(), input.end());
  for (Int g : gens) {
    if (g <= 0) throw Error(Errc::InvalidGenerator, "generators must be positive, got " + std::to_string(g));
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  Int g = 0;
  for (Int x : gens) g = std::gcd(g, x);
  if (g != 1) throw Error(Errc::GcdNotOne, "gcd of generators is " + std::to_string(g));
  if (gens.front() == 1) return NumericalSemigroup();
  if (gens.front() > kMaxFrobenius) throw Error(Errc::TooLarge, "multiplicity too large");

  const std::vector<Int> apery = apery_by_shortest_paths(gens);
  const Int frobenius = *std::max_element(apery.begin(), apery.end()) - gens.front();
  if (frobenius > kMaxFrobenius) {
    throw Error(Errc::TooLarge, "Frobenius number " + std::to_string(frobenius) + " exceeds limit");
  }
  const Int m = gens.front();
  BitWindow members(static_cast<std::size_t>(frobenius + 1));
  for (Int z = 0; z <= frobenius; ++z) {
    if (z >= apery[static_cast<std::size_t>(z % m)]) members.set(static_cast<std::size_t>(z));
  }
  return from_membership(std::move(members), frobenius);
}

NumericalSemigroup NumericalSemigroup::from_membership(BitWindow members, Int frobenius) {
  if (frobenius < 0) return NumericalSemigroup();
  Data data;
  data.frobenius = frobenius;
  Int m = 1;
  while (!members.test(m)) ++m;

  std::vector<Int> apery(static_cast<std::size_t>(m), -1);
  Int found = 0;
  for (Int z = 0; found < m; ++z) {
    auto& slot = apery[static_cast<std::size_t>(z % m)];
    if (slot < 0 && members.test(z)) {
      slot = z;
      ++found;
    }
  }
  std::vector<Int> sorted_apery = apery;
  std::sort(sorted_apery.begin(), sorted_apery.end());
  data.gens.push_back(m);
  for (std::size_t i = 1; i < sorted_apery.size(); ++i) {
    const Int w = sorted_apery[i];
    bool decomposable = false;
    for (std::size_t j = 1; j < i && !decomposable; ++j) {
      const Int rest = w - sorted_apery[j];
      decomposable = rest > 0 && std::binary_search(sorted_apery.begin() + 1, sorted_apery.end(), rest);
    }
    if (!decomposable) data.gens.push_back(w);
  }
  std::sort(data.gens.begin(), data.gens.end());

  for (Int z = 1; z <= frobenius; ++z) {
    if (!members.test(z)) data.gaps.push_back(z);
  }
  data.members = std::move(members);
  return NumericalSemigroup(std::make_shared<const Data>(std::move(data)));
}

NumericalSemigroup NumericalSemigroup::parse(std::string_view text) {
  std::vector<Int> gens;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    std::string_view field = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    Int value = 0;
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc{} || end != field.data() + field.size()) {
      throw Error(Errc::ParseError, "bad generator field '" + std::string(field) + "'");
    }
    if (value <= 0) throw Error(Errc::ParseError, "generators must be positive, got " + std::string(field));
    gens.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_generators(gens);
}

std::string NumericalSemigroup::to_string() const {
  std::string out;
  for (Int g : d_->gens) {
    if (!out.empty()) out += ',';
    out += std::to_string(g);
  }
  return out;
}

NumericalSemigroup NumericalSemigroup::remove_generator(Int x) const {
  const auto& gens = d_->gens;
  if (x <= d_->frobenius || !std::binary_search(gens.begin(), gens.end(), x)) {
    throw Error(Errc::InvalidGenerator, std::to_string(x) + " is not a removable generator of <" + to_string() + ">");
  }
  BitWindow members(static_cast<std::size_t>(x + 1));
  for (Int z = 0; z < x; ++z) {
    if (contains(z)) members.set(static_cast<std::size_t>(z));
  }
  return from_membership(std::move(members), x);
}

std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s) {
  if (s.is_regular()) return {-1};
  std::vector<Int> out;
  for (Int g : s.gaps()) {
    const auto& gens = s.minimal_generators();
    if (std::all_of(gens.begin(), gens.end(), [&](Int n) { return s.contains(g + n); })) out.push_back(g);
  }
  return out;
}

bool is_symmetric(const NumericalSemigroup& s) { return 2 * s.genus() == s.frobenius() + 1; }

bool is_almost_symmetric(const NumericalSemigroup& s) {
  const std::vector<Int> pf = pseudo_frobenius(s);
  for (Int g : s.gaps()) {
    if (!s.contains(s.frobenius() - g) && !std::binary_search(pf.begin(), pf.end(), g)) return false;
  }
  return true;
}

InvariantRecord invariants(const NumericalSemigroup& s) {
  InvariantRecord r;
  r.embedding_dimension = s.embedding_dimension();
  r.multiplicity = s.multiplicity();
  r.genus = s.genus();
  r.frobenius = s.frobenius();
  r.pseudo_frobenius = pseudo_frobenius(s);
  r.cm_type = static_cast<Int>(r.pseudo_frobenius.size());
  r.symmetric = is_symmetric(s);
  r.almost_symmetric = is_almost_symmetric(s);
  r.med = r.multiplicity == r.embedding_dimension;
  return r;
}

std::vector<Int> apery_set(const NumericalSemigroup& s, Int n) {
  if (n <= 0 || !s.contains(n)) {
    throw Error(Errc::NotAMember, std::to_string(n) + " is not a positive element of <" + s.to_string() + ">");
  }
  std::vector<Int> least(static_cast<std::size_t>(n), -1);
  Int found = 0;
  for (Int z = 0; found < n; ++z) {
    auto& slot = least[static_cast<std::size_t>(z % n)];
    if (slot < 0 && s.contains(z)) {
      slot = z;
      ++found;
    }
  }
  std::sort(least.begin(), least.end());
  return least;
}

}  // namespace curvelab
