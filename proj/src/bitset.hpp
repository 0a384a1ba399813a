#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace cycleforge::detail {

// Fixed-width vertex set for the search kernels; W words cover 64 * W vertices.
template <std::size_t W>
struct Bits {
  std::array<std::uint64_t, W> words{};

  void set(std::size_t i) { words[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words[i >> 6] >> (i & 63)) & 1; }

  bool any() const {
    for (auto x : words) {
      if (x) return true;
    }
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : words) c += static_cast<std::size_t>(std::popcount(x));
    return c;
  }

  Bits& operator|=(const Bits& o) {
    for (std::size_t k = 0; k < W; ++k) words[k] |= o.words[k];
    return *this;
  }
  Bits& operator&=(const Bits& o) {
    for (std::size_t k = 0; k < W; ++k) words[k] &= o.words[k];
    return *this;
  }
  Bits& and_not(const Bits& o) {
    for (std::size_t k = 0; k < W; ++k) words[k] &= ~o.words[k];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }
  friend Bits operator|(Bits a, const Bits& b) { return a |= b; }
  friend bool operator==(const Bits&, const Bits&) = default;

  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < W; ++k) {
      if (words[k] & o.words[k]) return true;
    }
    return false;
  }

  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t k = 0; k < W; ++k) c += static_cast<std::size_t>(std::popcount(words[k] & o.words[k]));
    return c;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < W; ++k) {
      for (std::uint64_t x = words[k]; x; x &= x - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(x)));
    }
  }

  // All indices in [from, n).
  static Bits range(std::size_t from, std::size_t n) {
    Bits b;
    for (std::size_t i = from; i < n; ++i) b.set(i);
    return b;
  }
};

}  // namespace cycleforge::detail
