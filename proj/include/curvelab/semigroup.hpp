#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "curvelab/bit_window.hpp"

namespace curvelab {

using Int = std::int64_t;

// Largest Frobenius number accepted; membership is stored as a bit window
// of that width.
inline constexpr Int kMaxFrobenius = Int{1} << 22;

// A numerical semigroup S, standing for the monomial curve ring k[[t^S]].
//
// Immutable handle to shared data, cheap to copy and safe to share across
// threads. Two handles compare equal when they describe the same set.
class NumericalSemigroup {
 public:
  // The semigroup of all nonnegative integers (the regular ring).
  NumericalSemigroup();

  // Input need not be minimal or sorted. Throws EmptyGenerators, GcdNotOne,
  // or TooLarge when the Frobenius number exceeds kMaxFrobenius.
  static NumericalSemigroup from_generators(std::span<const Int> gens);

  // Parses "3,5,7". Rejects empty fields and non-positive entries.
  static NumericalSemigroup parse(std::string_view text);

  const std::vector<Int>& minimal_generators() const noexcept { return d_->gens; }
  Int frobenius() const noexcept { return d_->frobenius; }
  const std::vector<Int>& gaps() const noexcept { return d_->gaps; }
  Int multiplicity() const noexcept { return d_->gens.front(); }
  Int genus() const noexcept { return static_cast<Int>(d_->gaps.size()); }
  Int embedding_dimension() const noexcept { return static_cast<Int>(d_->gens.size()); }
  // frobenius + 1: every integer at or above it is a member.
  Int conductor_value() const noexcept { return d_->frobenius + 1; }

  bool contains(Int z) const noexcept {
    return z >= 0 && (z > d_->frobenius || d_->members.test(z));
  }

  // Membership bits for [0, frobenius]; offsets past the end read as members.
  const BitWindow& membership() const noexcept { return d_->members; }

  bool is_regular() const noexcept { return d_->frobenius < 0; }

  // "3,5,7"; the regular semigroup prints as "1".
  std::string to_string() const;

  // S \ {x}; x must be a minimal generator larger than the Frobenius number.
  NumericalSemigroup remove_generator(Int x) const;

  bool same_object(const NumericalSemigroup& other) const noexcept { return d_ == other.d_; }
  friend bool operator==(const NumericalSemigroup& a, const NumericalSemigroup& b) noexcept {
    return a.d_ == b.d_ || a.d_->gens == b.d_->gens;
  }

 private:
  struct Data {
    std::vector<Int> gens;
    Int frobenius = -1;
    std::vector<Int> gaps;
    BitWindow members;
  };

  explicit NumericalSemigroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static NumericalSemigroup from_membership(BitWindow members, Int frobenius);

  std::shared_ptr<const Data> d_;
};

struct InvariantRecord {
  Int embedding_dimension = 1;
  Int multiplicity = 1;
  Int genus = 0;
  Int frobenius = -1;
  std::vector<Int> pseudo_frobenius;
  Int cm_type = 1;
  bool symmetric = true;
  bool almost_symmetric = true;
  bool med = true;
};

// Gaps g with g + s in S for every nonzero s in S; {-1} for the regular case.
std::vector<Int> pseudo_frobenius(const NumericalSemigroup& s);
bool is_symmetric(const NumericalSemigroup& s);
// Every gap g with frobenius - g also a gap is pseudo-Frobenius.
bool is_almost_symmetric(const NumericalSemigroup& s);
InvariantRecord invariants(const NumericalSemigroup& s);

// The n least members of S, one per residue class mod n, sorted ascending.
// Throws NotAMember unless n is a positive member of S.
std::vector<Int> apery_set(const NumericalSemigroup& s, Int n);

}  // namespace curvelab
