#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace pyrolace {

/// Fixed-width vertex bitset. Every graph and hypergraph in the library is
/// bounded by kCapacity vertices; constructors reject larger inputs.
class VertexSet {
 public:
  static constexpr std::size_t kWords = 2;
  static constexpr std::size_t kCapacity = 64 * kWords;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<std::size_t> vertices) {
    for (std::size_t v : vertices) set(v);
  }

  /// {0, 1, ..., n-1}
  static VertexSet range(std::size_t n) {
    VertexSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t bits = n >= 64 ? 64 : n;
      s.words_[w] = bits == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
      n -= bits;
    }
    return s;
  }

  template <class Range>
  static VertexSet from(const Range& vertices) {
    VertexSet s;
    for (auto v : vertices) s.set(static_cast<std::size_t>(v));
    return s;
  }

  bool test(std::size_t v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }
  void set(std::size_t v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(std::size_t v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }
  bool is_subset_of(const VertexSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }
  bool intersects(const VertexSet& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  /// Smallest member; kCapacity when empty.
  std::size_t first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] != 0) return 64 * w + static_cast<std::size_t>(std::countr_zero(words_[w]));
    return kCapacity;
  }

  /// Calls f(v) for every member in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(64 * w + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  /// Set difference.
  VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) h = (h ^ w) * 0xbf58476d1ce4e5b9ULL;
    return static_cast<std::size_t>(h ^ (h >> 31));
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

struct VertexSetHash {
  std::size_t operator()(const VertexSet& s) const { return s.hash(); }
};

}  // namespace pyrolace
