#include "curvelab/ideal.hpp"

#include <bit>

#include "curvelab/error.hpp"

namespace curvelab {

namespace {

constexpr std::uint64_t kAll = ~std::uint64_t{0};

// Bits of [z, z + 64) at or beyond `bound`.
std::uint64_t mask_from(Int z, Int bound) {
  const Int k = bound - z;
  if (k <= 0) return kAll;
  if (k >= 64) return 0;
  return kAll << k;
}

}  // namespace

RelativeIdeal RelativeIdeal::from_chunks(const NumericalSemigroup& parent, Int lo, const ChunkFn& chunks) {
  const Int width = parent.conductor_value();
  const Int forced = lo + width;
  auto read = [&](Int z) { return chunks(z) | mask_from(z, forced); };

  Int min = forced;
  for (Int z = lo; z < forced; z += 64) {
    const std::uint64_t bits = read(z);
    if (bits != 0) {
      min = z + std::countr_zero(bits);
      break;
    }
  }
  BitWindow window(static_cast<std::size_t>(width));
  const std::size_t words = (static_cast<std::size_t>(width) + 63) / 64;
  for (std::size_t i = 0; i < words; ++i) window.store_word(i, read(min + static_cast<Int>(64 * i)));
  return RelativeIdeal(parent, min, std::move(window));
}

RelativeIdeal RelativeIdeal::from_predicate(const NumericalSemigroup& parent, Int lo,
                                            const std::function<bool(Int)>& member) {
  return from_chunks(parent, lo, [&](Int z) {
    std::uint64_t bits = 0;
    for (unsigned k = 0; k < 64; ++k) {
      if (member(z + k)) bits |= std::uint64_t{1} << k;
    }
    return bits;
  });
}

Int RelativeIdeal::tail_start() const {
  Int t = window_end();
  while (t - 1 >= min_ && contains(t - 1)) --t;
  return t;
}

std::vector<Int> RelativeIdeal::window_members() const {
  std::vector<Int> out;
  const Int end = window_end();
  for (Int z = min_; z < end; z += 64) {
    std::uint64_t bits = chunk(z) & ~mask_from(z, end);
    while (bits != 0) {
      out.push_back(z + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

RelativeIdeal RelativeIdeal::translate(Int x) const { return RelativeIdeal(parent_, min_ + x, window_); }

bool RelativeIdeal::is_subset_of(const RelativeIdeal& other) const {
  if (min_ < other.min_) return false;
  const Int end = window_end();
  for (Int z = min_; z < end; z += 64) {
    if ((chunk(z) & ~other.chunk(z)) != 0) return false;
  }
  return true;
}

bool RelativeIdeal::is_closed() const {
  for (Int x : window_members()) {
    for (Int n : parent_.minimal_generators()) {
      if (!contains(x + n)) return false;
    }
  }
  return true;
}

void require_same_parent(const RelativeIdeal& a, const RelativeIdeal& b) {
  if (!(a.parent() == b.parent())) {
    throw Error(Errc::ParentMismatch,
                "ideals over <" + a.parent().to_string() + "> and <" + b.parent().to_string() + ">");
  }
}

}  // namespace curvelab
