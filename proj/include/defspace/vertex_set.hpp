#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>

namespace defspace {

/// Subset of the vertices of a defining graph, stored as a bitmask over
/// vertex indices. Graphs are limited to 64 vertices.
class VertexSet {
 public:
  static constexpr int kCapacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }
  static constexpr VertexSet pair(int a, int b) { return single(a) | single(b); }
  static constexpr VertexSet first(int n) {
    return n >= kCapacity ? VertexSet{~std::uint64_t{0}} : VertexSet{(std::uint64_t{1} << n) - 1};
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  constexpr int lowest() const { return std::countr_zero(bits_); }

  constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet{a.bits_ | b.bits_}; }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & b.bits_}; }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet{a.bits_ & ~b.bits_}; }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }

  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  class iterator {
   public:
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr int operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    friend constexpr bool operator==(iterator, iterator) = default;

   private:
    std::uint64_t rest_;
  };
  constexpr iterator begin() const { return iterator{bits_}; }
  constexpr iterator end() const { return iterator{0}; }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace defspace

template <>
struct std::hash<defspace::VertexSet> {
  std::size_t operator()(defspace::VertexSet s) const noexcept { return std::hash<std::uint64_t>{}(s.bits()); }
};
