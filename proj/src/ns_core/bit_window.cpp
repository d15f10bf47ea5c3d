#include "curvelab/bit_window.hpp"

#include <bit>

namespace curvelab {

BitWindow::BitWindow(std::size_t width) : width_(width), words_((width + 63) / 64, 0) {
  fix_padding();
}

void BitWindow::fix_padding() noexcept {
  const std::size_t used = width_ % 64;
  if (used != 0 && !words_.empty()) {
    words_.back() |= ~std::uint64_t{0} << used;
  }
}

bool BitWindow::test(std::int64_t offset) const noexcept {
  if (offset < 0) return false;
  const auto u = static_cast<std::size_t>(offset);
  if (u >= width_) return true;
  return (words_[u / 64] >> (u % 64)) & 1u;
}

void BitWindow::set(std::size_t offset) noexcept {
  if (offset < width_) words_[offset / 64] |= std::uint64_t{1} << (offset % 64);
}

void BitWindow::reset(std::size_t offset) noexcept {
  if (offset < width_) words_[offset / 64] &= ~(std::uint64_t{1} << (offset % 64));
}

std::uint64_t BitWindow::chunk(std::int64_t offset) const noexcept {
  if (offset >= static_cast<std::int64_t>(width_)) return ~std::uint64_t{0};
  if (offset <= -64) return 0;
  if (offset < 0) return chunk(0) << static_cast<unsigned>(-offset);
  const auto u = static_cast<std::size_t>(offset);
  const std::size_t q = u / 64;
  const unsigned r = u % 64;
  std::uint64_t bits = word(q) >> r;
  if (r != 0) bits |= word(q + 1) << (64 - r);
  return bits;
}

void BitWindow::store_word(std::size_t word_index, std::uint64_t bits) noexcept {
  if (word_index >= words_.size()) return;
  words_[word_index] = bits;
  if (word_index + 1 == words_.size()) fix_padding();
}

std::size_t BitWindow::count() const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    if (i + 1 == words_.size() && width_ % 64 != 0) w &= (std::uint64_t{1} << (width_ % 64)) - 1;
    n += static_cast<std::size_t>(std::popcount(w));
  }
  return n;
}

}  // namespace curvelab
