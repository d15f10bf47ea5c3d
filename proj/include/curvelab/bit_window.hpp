#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace curvelab {

// Fixed-width bit vector describing membership of offsets [0, width).
// Offsets below 0 read as absent and offsets at or beyond width read as
// present, which is the shape of every eventually-cofinite set used here.
class BitWindow {
 public:
  BitWindow() = default;
  explicit BitWindow(std::size_t width);

  std::size_t width() const noexcept { return width_; }

  bool test(std::int64_t offset) const noexcept;
  void set(std::size_t offset) noexcept;
  void reset(std::size_t offset) noexcept;

  // Bits for offsets [offset, offset + 64), bit k <-> offset + k.
  std::uint64_t chunk(std::int64_t offset) const noexcept;

  // Overwrites the 64 bits starting at a multiple-of-64 offset.
  void store_word(std::size_t word_index, std::uint64_t bits) noexcept;

  std::size_t count() const noexcept;

  friend bool operator==(const BitWindow&, const BitWindow&) = default;

 private:
  std::uint64_t word(std::size_t index) const noexcept {
    return index < words_.size() ? words_[index] : ~std::uint64_t{0};
  }
  void fix_padding() noexcept;

  std::size_t width_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace curvelab
