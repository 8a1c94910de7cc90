#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "monadic/algebras.hpp"
#include "monadic/syntax.hpp"

namespace monadic {

using Valuation = std::map<std::string, Elem>;

/// Int formulas evaluate in monadic Heyting algebras, Mod formulas in MS4-algebras.
/// Throws std::invalid_argument on a language mismatch or an unassigned variable.
Elem evaluate(const FiniteMha& a, const Valuation& v, const Formula& f);
Elem evaluate(const FiniteMs4Algebra& b, const Valuation& v, const Formula& f);

struct Validity {
  bool valid = false;
  std::optional<Valuation> counter;  // lexicographically least failing valuation
};

/// Exhaustive over all valuations of the formula's variables (sorted by name,
/// first variable most significant). Throws std::invalid_argument when the
/// formula has more than max_vars variables.
Validity validates(const FiniteMha& a, const Formula& f, std::size_t max_vars = 4);
Validity validates(const FiniteMs4Algebra& b, const Formula& f, std::size_t max_vars = 4);

/// O(b) validates f exactly when b validates the translation of f.
bool translation_equivalence(const FiniteMs4Algebra& b, const Formula& f);

/// b validates the master-boxed fresh disjunction of g1 and g2 iff it validates
/// g1 or g2. Throws std::invalid_argument unless b is subdirectly irreducible.
bool intersection_step(const FiniteMs4Algebra& b, const Formula& g1, const Formula& g2);

/// Uniform choice among the connectives of the language; leaves at depth 0.
/// Variables are drawn from the first `vars` of p, q, r, s, t, u.
Formula random_formula(Lang lang, std::mt19937_64& rng, std::size_t depth, std::size_t vars);

}  // namespace monadic
