#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <limits>
#include <string>
#include <vector>

namespace toughlab {

#ifdef TOUGHLAB_WIDE_BITSETS
using Word = std::uint64_t;
#else
using Word = std::uint32_t;
#endif

// Largest vertex count a Graph can hold: one machine word per adjacency row.
inline constexpr int kMaxVertices = std::numeric_limits<Word>::digits;

constexpr Word low_bits(int count) {
  return count >= kMaxVertices ? ~Word{0} : (Word{1} << count) - 1;
}

constexpr Word bit(int v) { return Word{1} << v; }

constexpr int popcount(Word w) { return std::popcount(w); }

// Iterates the set bits of a word in ascending order.
class BitIterator {
 public:
  using iterator_category = std::forward_iterator_tag;
  using value_type = int;
  using difference_type = std::ptrdiff_t;
  using pointer = const int*;
  using reference = int;

  constexpr BitIterator() = default;
  constexpr explicit BitIterator(Word w) : w_(w) {}

  constexpr int operator*() const { return std::countr_zero(w_); }
  constexpr BitIterator& operator++() {
    w_ &= w_ - 1;
    return *this;
  }
  constexpr BitIterator operator++(int) {
    BitIterator old = *this;
    ++*this;
    return old;
  }
  constexpr bool operator==(const BitIterator&) const = default;

 private:
  Word w_ = 0;
};

struct Bits {
  Word w;
  constexpr BitIterator begin() const { return BitIterator(w); }
  constexpr BitIterator end() const { return BitIterator(0); }
};

// A set of vertices of a graph with `universe` vertices.
class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr VertexSet(int universe, Word bits) : bits_(bits), universe_(universe) {
    assert(universe >= 0 && universe <= kMaxVertices);
    assert((bits & ~low_bits(universe)) == 0);
  }

  static constexpr VertexSet empty_of(int universe) { return VertexSet(universe, 0); }
  static constexpr VertexSet full(int universe) { return VertexSet(universe, low_bits(universe)); }
  static VertexSet of(int universe, std::initializer_list<int> vs) {
    Word w = 0;
    for (int v : vs) w |= bit(v);
    return VertexSet(universe, w);
  }

  constexpr int universe() const { return universe_; }
  constexpr Word bits() const { return bits_; }

  constexpr bool contains(int v) const { return v >= 0 && v < universe_ && ((bits_ >> v) & 1U); }
  constexpr int size() const { return popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  // Least member, or -1 for the empty set.
  constexpr int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

  constexpr VertexSet with(int v) const { return VertexSet(universe_, bits_ | bit(v)); }
  constexpr VertexSet without(int v) const { return VertexSet(universe_, bits_ & ~bit(v)); }
  constexpr VertexSet complement() const { return VertexSet(universe_, ~bits_ & low_bits(universe_)); }
  constexpr bool subset_of(const VertexSet& o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(const VertexSet& o) const { return (bits_ & o.bits_) != 0; }

  constexpr VertexSet operator|(const VertexSet& o) const { return VertexSet(universe_, bits_ | o.bits_); }
  constexpr VertexSet operator&(const VertexSet& o) const { return VertexSet(universe_, bits_ & o.bits_); }
  constexpr VertexSet operator-(const VertexSet& o) const { return VertexSet(universe_, bits_ & ~o.bits_); }

  constexpr bool operator==(const VertexSet&) const = default;
  // Ordered by size, then by bit pattern.
  constexpr bool operator<(const VertexSet& o) const {
    return size() != o.size() ? size() < o.size() : bits_ < o.bits_;
  }

  constexpr BitIterator begin() const { return BitIterator(bits_); }
  constexpr BitIterator end() const { return BitIterator(0); }

  std::vector<int> members() const { return {begin(), end()}; }
  std::string to_string() const {
    std::string s = "{";
    bool first_member = true;
    for (int v : *this) {
      if (!first_member) s += ',';
      s += std::to_string(v);
      first_member = false;
    }
    return s + "}";
  }

 private:
  Word bits_ = 0;
  int universe_ = 0;
};

}  // namespace toughlab
