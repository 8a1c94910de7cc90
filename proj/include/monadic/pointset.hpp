#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace monadic {

// Subsets of a finite frame, one bit per point. Frames are capped at 64 points.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;

constexpr PointSet singleton(std::size_t i) { return PointSet{1} << i; }

constexpr PointSet full_set(std::size_t n) {
  return n >= kMaxPoints ? ~PointSet{0} : singleton(n) - 1;
}

constexpr bool contains(PointSet s, std::size_t i) { return ((s >> i) & 1U) != 0; }

constexpr bool is_subset(PointSet a, PointSet b) { return (a & ~b) == 0; }

inline std::size_t cardinality(PointSet s) {
  return static_cast<std::size_t>(std::popcount(s));
}

template <class Fn>
void for_each_member(PointSet s, Fn&& fn) {
  while (s != 0) {
    fn(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

std::vector<std::size_t> members(PointSet s);

// Size first, then lexicographic on the sorted member lists.
bool size_then_lex_less(PointSet a, PointSet b);

/// Binary relation on {0..n-1} stored as successor rows.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : succ_(n, 0) {}

  static Relation identity(std::size_t n);

  std::size_t size() const { return succ_.size(); }

  bool holds(std::size_t x, std::size_t y) const { return contains(succ_[x], y); }
  void set(std::size_t x, std::size_t y) { succ_[x] |= singleton(y); }

  /// R[x]
  PointSet successors(std::size_t x) const { return succ_[x]; }
  /// R^{-1}[x]
  PointSet predecessors(std::size_t x) const;
  /// R[S]
  PointSet image(PointSet s) const;
  /// R^{-1}[S]
  PointSet preimage(PointSet s) const;

  Relation inverse() const;
  /// Relational composite "first this, then next": result[x] = next[this[x]].
  Relation then(const Relation& next) const;
  Relation intersect(const Relation& other) const;
  Relation reflexive_transitive_closure() const;
  /// Induced relation on the members of s, renumbered in increasing order.
  Relation restricted_to(PointSet s) const;

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_antisymmetric() const;
  bool is_subset_of(const Relation& other) const;

  /// True when R[S] is contained in S.
  bool is_upset(PointSet s) const { return is_subset(image(s), s); }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::vector<PointSet> succ_;
};

/// Every S with R[S] ⊆ S, ordered by size_then_lex_less. Throws above 24 points.
std::vector<PointSet> closed_sets(const Relation& rel);

}  // namespace monadic
