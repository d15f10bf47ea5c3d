#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvelab/bit_window.hpp"
#include "curvelab/semigroup.hpp"

namespace curvelab {

// A fractional monomial ideal E of k[[t^S]]: a subset of Z, bounded below,
// with E + S contained in E. Rank-one maximal Cohen-Macaulay module.
//
// Stored as its least element plus a membership window of width
// frobenius(S) + 1; min(E) + S in E forces every integer at or above
// min(E) + frobenius(S) + 1 to be a member.
class RelativeIdeal {
 public:
  // Chunk source: membership bits for [z, z + 64), bit k <-> z + k.
  using ChunkFn = std::function<std::uint64_t(Int)>;

  // Builds the ideal whose members are given by `chunks` on [lo, lo + w),
  // w = frobenius + 1, and which contains everything from lo + w on. The
  // caller guarantees the described set is closed under adding S.
  static RelativeIdeal from_chunks(const NumericalSemigroup& parent, Int lo, const ChunkFn& chunks);
  static RelativeIdeal from_predicate(const NumericalSemigroup& parent, Int lo,
                                      const std::function<bool(Int)>& member);

  const NumericalSemigroup& parent() const noexcept { return parent_; }
  Int min() const noexcept { return min_; }
  // min + frobenius + 1; membership is only stored below this point.
  Int window_end() const noexcept { return min_ + static_cast<Int>(window_.width()); }
  // Least t with [t, inf) inside E.
  Int tail_start() const;

  bool contains(Int z) const noexcept { return window_.test(z - min_); }
  std::uint64_t chunk(Int z) const noexcept { return window_.chunk(z - min_); }

  // Members in [min, window_end).
  std::vector<Int> window_members() const;

  RelativeIdeal translate(Int x) const;
  bool is_subset_of(const RelativeIdeal& other) const;
  // E + S in E, checked against the minimal generators over the window.
  bool is_closed() const;

  friend bool operator==(const RelativeIdeal& a, const RelativeIdeal& b) noexcept {
    return a.min_ == b.min_ && a.window_ == b.window_ && a.parent_ == b.parent_;
  }

 private:
  RelativeIdeal(NumericalSemigroup parent, Int min, BitWindow window)
      : parent_(std::move(parent)), min_(min), window_(std::move(window)) {}

  NumericalSemigroup parent_;
  Int min_ = 0;
  BitWindow window_;
};

// Same-parent precondition shared by the binary operations.
void require_same_parent(const RelativeIdeal& a, const RelativeIdeal& b);

// S itself, as the free module of rank one.
RelativeIdeal unit_ideal(const NumericalSemigroup& s);
// The normalization N = all nonnegative integers.
RelativeIdeal normalization_ideal(const NumericalSemigroup& s);
// m = S \ {0}.
RelativeIdeal maximal_ideal(const NumericalSemigroup& s);

RelativeIdeal ideal_from_generators(const NumericalSemigroup& s, std::span<const Int> gens);

// (E - min(E), min(E)).
std::pair<RelativeIdeal, Int> normalize(const RelativeIdeal& e);

RelativeIdeal sum(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal n_fold_sum(const RelativeIdeal& e, Int n);
// {z : z + F in E}.
RelativeIdeal difference(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal intersection(const RelativeIdeal& e, const RelativeIdeal& f);
RelativeIdeal union_of(const RelativeIdeal& e, const RelativeIdeal& f);

// K = {x : frobenius - x not in S}, with min 0.
RelativeIdeal canonical_ideal(const NumericalSemigroup& s);
// K - E.
RelativeIdeal canonical_dual(const RelativeIdeal& e);
// S - E.
RelativeIdeal ring_dual(const RelativeIdeal& e);
// E + (S - E).
RelativeIdeal trace_ideal(const RelativeIdeal& e);
// E \ (E + m), ascending.
std::vector<Int> minimal_generators(const RelativeIdeal& e);

bool is_reflexive(const RelativeIdeal& e);
bool is_principal(const RelativeIdeal& e);

// x with F = x + E, if any.
std::optional<Int> is_translate(const RelativeIdeal& e, const RelativeIdeal& f);

// The graded kernel of R(-a) + R(-b) -> E for a two-generated E with
// generators a < b, in absolute degrees: (a + S) intersect (b + S).
struct SyzygyKernel {
  Int a = 0;
  Int b = 0;
  RelativeIdeal kernel;
};
SyzygyKernel syzygy_kernel(const RelativeIdeal& e);

// Normalized first syzygy of a two-generated ideal. Throws NotTwoGenerated.
RelativeIdeal syzygy_two_generated(const RelativeIdeal& e);

// Per-degree rank count of 0 -> J -> R(-a) + R(-b) -> E -> 0 over
// [min(E) - 1, a + b + 2 frobenius + 2]. Returns the first failing degree.
std::optional<Int> syzygy_exactness_failure(const RelativeIdeal& e, const SyzygyKernel& k);

struct IdealClassList {
  NumericalSemigroup parent;
  std::vector<RelativeIdeal> classes;
};

// Every normalized monomial fractional ideal up to translation: S u G for
// G a subset of the gaps closed under adding S. Ordered by the bitmask
// that has bit i set for the i-th smallest gap in G.
IdealClassList enumerate_ideal_classes(const NumericalSemigroup& s);

// "{0,2,3}∪[5,∞)", or "[5,∞)" when nothing lies below the tail.
std::string to_text(const RelativeIdeal& e);
// Accepts the output of to_text; "U" and "inf" are accepted for ∪ and ∞.
RelativeIdeal parse_ideal(const NumericalSemigroup& s, std::string_view text);

}  // namespace curvelab
