#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "monadic/report.hpp"

namespace monadic {

using Elem = std::uint32_t;

/// Dense n x n operation table.
class Table {
 public:
  Table() = default;
  explicit Table(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const { return n_; }
  Elem operator()(Elem a, Elem b) const { return data_[a * n_ + b]; }
  void set(Elem a, Elem b, Elem v) { data_[a * n_ + b] = v; }

  friend bool operator==(const Table&, const Table&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Elem> data_;
};

/// Finite monadic Heyting algebra over elements 0..n-1; 0 is bottom and n-1 is top.
struct FiniteMha {
  std::size_t n = 0;
  Table meet;
  Table join;
  Table imp;
  std::vector<Elem> forall;
  std::vector<Elem> exists;
  std::vector<std::string> labels;  // optional element names

  Elem bot() const { return 0; }
  Elem top() const { return static_cast<Elem>(n - 1); }
  bool leq(Elem a, Elem b) const { return meet(a, b) == a; }
};

/// Finite MS4-algebra over elements 0..n-1; 0 is bottom and n-1 is top.
struct FiniteMs4Algebra {
  std::size_t n = 0;
  Table meet;
  Table join;
  std::vector<Elem> neg;
  std::vector<Elem> box;
  std::vector<Elem> forall;
  std::vector<std::string> labels;

  Elem bot() const { return 0; }
  Elem top() const { return static_cast<Elem>(n - 1); }
  bool leq(Elem a, Elem b) const { return meet(a, b) == a; }
  Elem imp(Elem a, Elem b) const { return join(neg[a], b); }
  Elem exists(Elem a) const { return neg[forall[neg[a]]]; }
  /// box after forall
  Elem master(Elem a) const { return box[forall[a]]; }
};

/// A filter closed under the quantifier (and box, for MS4). Finite filters are
/// principal, so the generator is the least member.
struct MonadicFilter {
  Elem generator = 0;
  std::vector<Elem> elements;  // sorted

  bool contains(Elem a) const;
  friend bool operator==(const MonadicFilter&, const MonadicFilter&) = default;
};

template <class Algebra>
struct Quotient {
  Algebra algebra;
  std::vector<Elem> projection;  // old element -> class index
};

struct OpenAlgebra {
  FiniteMha algebra;
  std::vector<Elem> inclusion;  // open element index -> element of the MS4-algebra
};

/// Every defining identity checked over all element tuples; failures carry the
/// first witness tuple. Throws std::invalid_argument for inconsistent table sizes.
ValidationReport validate_algebra(const FiniteMha& a);
ValidationReport validate_algebra(const FiniteMs4Algebra& b);

/// Permutes elements so that bottom is 0 and top is n-1, keeping the relative
/// order of the rest. Throws std::invalid_argument when no bounds exist.
FiniteMha normalized(const FiniteMha& a);
FiniteMs4Algebra normalized(const FiniteMs4Algebra& b);

/// Open elements (box a = a) with a -> b := box(~a | b), forall := box forall, exists := exists.
OpenAlgebra open_algebra(const FiniteMs4Algebra& b);

/// {forall a}; throws std::domain_error unless it equals the fixpoints of forall
/// and, for Heyting algebras, the fixpoints and the image of exists.
std::vector<Elem> fixpoint_subalgebra(const FiniteMha& a);
std::vector<Elem> fixpoint_subalgebra(const FiniteMs4Algebra& b);

bool is_monadic_filter(const FiniteMha& a, const std::vector<Elem>& elements);
bool is_monadic_filter(const FiniteMs4Algebra& b, const std::vector<Elem>& elements);

/// Ordered by generator index.
std::vector<MonadicFilter> monadic_filters(const FiniteMha& a);
std::vector<MonadicFilter> monadic_filters(const FiniteMs4Algebra& b);

/// Quotient by a ≡ b iff (a <-> b) ∈ F; classes are represented by their least
/// element. Throws std::invalid_argument if F is not a monadic filter.
Quotient<FiniteMha> quotient(const FiniteMha& a, const MonadicFilter& f);
Quotient<FiniteMs4Algebra> quotient(const FiniteMs4Algebra& b, const MonadicFilter& f);

/// Least subuniverse containing seed, bottom and top. Sorted.
std::vector<Elem> generated_subalgebra(const FiniteMha& a, const std::vector<Elem>& seed);
std::vector<Elem> generated_subalgebra(const FiniteMs4Algebra& b, const std::vector<Elem>& seed);

/// Subalgebra on a closed element set, re-indexed in increasing order.
/// Throws std::invalid_argument if the set is not closed.
FiniteMha induced_subalgebra(const FiniteMha& a, const std::vector<Elem>& elements);
FiniteMs4Algebra induced_subalgebra(const FiniteMs4Algebra& b, const std::vector<Elem>& elements);

/// All subalgebras of an MS4-algebra: boolean subalgebras come from partitions
/// of the atoms, and those closed under box and forall are kept.
std::vector<std::vector<Elem>> subalgebras(const FiniteMs4Algebra& b);

std::vector<Elem> atoms(const FiniteMs4Algebra& b);
std::vector<Elem> join_irreducibles(const FiniteMha& a);

/// Componentwise; the pair (i, j) has index i * a2.n + j.
FiniteMha product(const FiniteMha& a1, const FiniteMha& a2);
FiniteMs4Algebra product(const FiniteMs4Algebra& b1, const FiniteMs4Algebra& b2);

/// Algebraic test (a least monadic filter other than {top}) cross-checked
/// against the dual test (a Q-root). Throws std::logic_error on disagreement.
bool subdirectly_irreducible(const FiniteMha& a);
bool subdirectly_irreducible(const FiniteMs4Algebra& b);

/// Reports each operation the map fails to preserve, with the first witness.
ValidationReport check_homomorphism(const FiniteMha& src, const FiniteMha& dst,
                                    const std::vector<Elem>& map);
ValidationReport check_homomorphism(const FiniteMs4Algebra& src, const FiniteMs4Algebra& dst,
                                    const std::vector<Elem>& map);

/// Isomorphism search over bijections of join-irreducibles (atoms, for MS4).
std::optional<std::vector<Elem>> find_isomorphism(const FiniteMha& a1, const FiniteMha& a2);
std::optional<std::vector<Elem>> find_isomorphism(const FiniteMs4Algebra& b1,
                                                  const FiniteMs4Algebra& b2);

/// First pair (a1, a2) with forall a1 | forall a2 = top but neither a1 nor a2 top.
std::optional<std::pair<Elem, Elem>> quantified_disjunction_witness(const FiniteMha& a);
/// Same with the master modality in place of forall.
std::optional<std::pair<Elem, Elem>> quantified_disjunction_witness(const FiniteMs4Algebra& b);

}  // namespace monadic
