#include <algorithm>

#include "curvelab/error.hpp"
#include "curvelab/ideal.hpp"

namespace curvelab {

RelativeIdeal unit_ideal(const NumericalSemigroup& s) {
  return RelativeIdeal::from_chunks(s, 0, [&](Int z) { return s.membership().chunk(z); });
}

RelativeIdeal normalization_ideal(const NumericalSemigroup& s) {
  return RelativeIdeal::from_chunks(s, 0, [](Int) { return ~std::uint64_t{0}; });
}

RelativeIdeal maximal_ideal(const NumericalSemigroup& s) {
  return RelativeIdeal::from_chunks(s, 1, [&](Int z) { return s.membership().chunk(z); });
}

RelativeIdeal ideal_from_generators(const NumericalSemigroup& s, std::span<const Int> gens) {
  if (gens.empty()) throw Error(Errc::EmptyGenerators, "ideal needs at least one generator");
  const Int lo = *std::min_element(gens.begin(), gens.end());
  return RelativeIdeal::from_chunks(s, lo, [&](Int z) {
    std::uint64_t bits = 0;
    for (Int g : gens) bits |= s.membership().chunk(z - g);
    return bits;
  });
}

std::pair<RelativeIdeal, Int> normalize(const RelativeIdeal& e) { return {e.translate(-e.min()), e.min()}; }

RelativeIdeal sum(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_parent(e, f);
  const std::vector<Int> xs = e.window_members();
  return RelativeIdeal::from_chunks(e.parent(), e.min() + f.min(), [&](Int z) {
    std::uint64_t bits = 0;
    for (Int x : xs) bits |= f.chunk(z - x);
    return bits;
  });
}

RelativeIdeal n_fold_sum(const RelativeIdeal& e, Int n) {
  RelativeIdeal acc = unit_ideal(e.parent());
  for (Int i = 0; i < n; ++i) acc = sum(acc, e);
  return acc;
}

RelativeIdeal difference(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_parent(e, f);
  const std::vector<Int> ys = f.window_members();
  return RelativeIdeal::from_chunks(e.parent(), e.min() - f.min(), [&](Int z) {
    std::uint64_t bits = ~std::uint64_t{0};
    for (Int y : ys) bits &= e.chunk(z + y);
    return bits;
  });
}

RelativeIdeal intersection(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_parent(e, f);
  return RelativeIdeal::from_chunks(e.parent(), std::max(e.min(), f.min()),
                                    [&](Int z) { return e.chunk(z) & f.chunk(z); });
}

RelativeIdeal union_of(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_parent(e, f);
  return RelativeIdeal::from_chunks(e.parent(), std::min(e.min(), f.min()),
                                    [&](Int z) { return e.chunk(z) | f.chunk(z); });
}

RelativeIdeal canonical_ideal(const NumericalSemigroup& s) {
  const Int f = s.frobenius();
  return RelativeIdeal::from_predicate(s, 0, [&](Int x) { return !s.contains(f - x); });
}

RelativeIdeal canonical_dual(const RelativeIdeal& e) { return difference(canonical_ideal(e.parent()), e); }

RelativeIdeal ring_dual(const RelativeIdeal& e) { return difference(unit_ideal(e.parent()), e); }

RelativeIdeal trace_ideal(const RelativeIdeal& e) { return sum(e, ring_dual(e)); }

std::vector<Int> minimal_generators(const RelativeIdeal& e) {
  const RelativeIdeal covered = sum(e, maximal_ideal(e.parent()));
  const Int end = e.min() + std::max<Int>(e.parent().conductor_value(), 1);
  std::vector<Int> out;
  for (Int z = e.min(); z < end; ++z) {
    if (e.contains(z) && !covered.contains(z)) out.push_back(z);
  }
  return out;
}

std::optional<Int> is_translate(const RelativeIdeal& e, const RelativeIdeal& f) {
  require_same_parent(e, f);
  const Int x = f.min() - e.min();
  if (e.translate(x) == f) return x;
  return std::nullopt;
}

bool is_reflexive(const RelativeIdeal& e) { return is_translate(e, ring_dual(ring_dual(e))).has_value(); }

bool is_principal(const RelativeIdeal& e) { return is_translate(unit_ideal(e.parent()), e).has_value(); }

SyzygyKernel syzygy_kernel(const RelativeIdeal& e) {
  const std::vector<Int> gens = minimal_generators(e);
  if (gens.size() != 2) {
    throw Error(Errc::NotTwoGenerated, to_text(e) + " has " + std::to_string(gens.size()) + " generators");
  }
  const RelativeIdeal unit = unit_ideal(e.parent());
  return SyzygyKernel{gens[0], gens[1], intersection(unit.translate(gens[0]), unit.translate(gens[1]))};
}

std::optional<Int> syzygy_exactness_failure(const RelativeIdeal& e, const SyzygyKernel& k) {
  const NumericalSemigroup& s = e.parent();
  const Int hi = k.a + k.b + 2 * s.frobenius() + 2;
  for (Int d = e.min() - 1; d <= hi; ++d) {
    const int free_rank = int{s.contains(d - k.a)} + int{s.contains(d - k.b)};
    const int image_plus_kernel = int{e.contains(d)} + int{k.kernel.contains(d)};
    if (free_rank != image_plus_kernel) return d;
  }
  return std::nullopt;
}

RelativeIdeal syzygy_two_generated(const RelativeIdeal& e) {
  const SyzygyKernel k = syzygy_kernel(e);
  if (auto d = syzygy_exactness_failure(e, k)) {
    throw Error(Errc::VerificationFailed, "syzygy of " + to_text(e) + " not exact in degree " + std::to_string(*d));
  }
  return normalize(k.kernel).first;
}

}  // namespace curvelab
