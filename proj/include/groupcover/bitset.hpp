// Fixed-size dynamic bitset used for subgroup membership masks.

#pragma once

#include <bit>
#include <cassert>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace groupcover {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::uint32_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::uint32_t size() const { return size_; }

  void set(std::uint32_t i) {
    assert(i < size_);
    words_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::uint32_t i) {
    assert(i < size_);
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }
  bool test(std::uint32_t i) const {
    assert(i < size_);
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (std::uint64_t w : words_) c += std::uint32_t(std::popcount(w));
    return c;
  }
  bool any() const {
    for (std::uint64_t w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }
  bool all() const { return count() == size_; }

  Bitset& operator|=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

  bool is_subset_of(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    assert(size_ == o.size_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }
  std::uint32_t count_and(const Bitset& o) const {
    assert(size_ == o.size_);
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i)
      c += std::uint32_t(std::popcount(words_[i] & o.words_[i]));
    return c;
  }

  bool operator==(const Bitset& o) const = default;

  // Numeric-value order (bit i weighted 2^i); used for canonical sorting.
  std::strong_ordering operator<=>(const Bitset& o) const {
    if (size_ != o.size_) return size_ <=> o.size_;
    for (std::size_t i = words_.size(); i-- > 0;)
      if (words_[i] != o.words_[i]) return words_[i] <=> o.words_[i];
    return std::strong_ordering::equal;
  }

  template <typename Fn>
  void for_each_set(Fn&& fn) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        std::uint32_t b = std::uint32_t(std::countr_zero(w));
        fn(std::uint32_t(wi * 64 + b));
        w &= w - 1;
      }
    }
  }

  // Hex string, most significant nibble first, ceil(size/4) digits. Nibbles
  // never straddle words (64 is a multiple of 4).
  std::string to_hex() const {
    const std::uint32_t digits = (size_ + 3) / 4;
    std::string out(digits, '0');
    static const char* kHex = "0123456789abcdef";
    for (std::uint32_t d = 0; d < digits; ++d) {
      const std::uint32_t lo = 4 * d;
      const std::uint32_t nib = std::uint32_t(words_[lo >> 6] >> (lo & 63)) & 0xf;
      out[digits - 1 - d] = kHex[nib];
    }
    return out;
  }

 private:
  std::uint32_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace groupcover
