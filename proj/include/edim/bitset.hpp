#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace edim {

/// Fixed-width bit set packed into 64-bit words. Sized once at construction;
/// all binary operations require equal widths.
class Bitset {
 public:
  Bitset() = default;

  explicit Bitset(std::size_t bit_count)
      : bits_(bit_count), words_((bit_count + 63) / 64, 0) {}

  std::size_t size() const noexcept { return bits_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

  void reset() noexcept {
    for (auto& w : words_) w = 0;
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  bool all() const noexcept { return count() == bits_; }

  Bitset& operator|=(const Bitset& other) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  /// Popcount of *this | other, without materialising the union.
  std::size_t count_or(const Bitset& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(words_[i] | other.words_[i]);
    return c;
  }

  /// Bits set in other but not in *this; the gain of adding other to a cover.
  std::size_t count_gain(const Bitset& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::popcount(other.words_[i] & ~words_[i]);
    return c;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace edim
