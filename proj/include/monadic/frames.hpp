#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "monadic/pointset.hpp"
#include "monadic/report.hpp"

namespace monadic {

/// Finite descriptive MS4-frame: a quasi-order R and an equivalence E.
/// The topology of a finite frame is discrete, so only the relations are kept.
struct Ms4Frame {
  std::vector<std::string> points;
  Relation r;
  Relation e;

  std::size_t size() const { return points.size(); }
};

/// Finite descriptive MIPC-frame: a partial order R and a quasi-order Q.
struct MipcFrame {
  std::vector<std::string> points;
  Relation r;
  Relation q;

  std::size_t size() const { return points.size(); }
};

// Condition ids used in frame reports.
namespace cond {
inline constexpr const char* kRReflexive = "R-reflexive";
inline constexpr const char* kRTransitive = "R-transitive";
inline constexpr const char* kRAntisymmetric = "R-antisymmetric";
inline constexpr const char* kQReflexive = "Q-reflexive";
inline constexpr const char* kQTransitive = "Q-transitive";
inline constexpr const char* kQImageOfUpset = "Q-image-of-R-upset";
inline constexpr const char* kRInQ = "R-subset-of-Q";
inline constexpr const char* kQFactorization = "Q-factors-through-R-and-EQ";
inline constexpr const char* kEReflexive = "E-reflexive";
inline constexpr const char* kESymmetric = "E-symmetric";
inline constexpr const char* kETransitive = "E-transitive";
inline constexpr const char* kCommutation = "E-R-commutation";
}  // namespace cond

/// Checks the defining conditions. Each failed condition is reported once with
/// the first witness in point order; for the Q-image condition the witness is
/// the smallest violating R-upset followed by the point leaving Q[U].
/// Throws std::invalid_argument for malformed relation sizes.
ValidationReport validate_frame(const Ms4Frame& f);
ValidationReport validate_frame(const MipcFrame& f);

struct DerivedRelations {
  Relation e_r;
  Relation e_q;
  Relation q;
};

/// Q := E∘R on MS4 frames (Q[x] = E[R[x]]).
Relation q_relation(const Ms4Frame& f);
DerivedRelations derived_relations(const Ms4Frame& f);
DerivedRelations derived_relations(const MipcFrame& f);

struct Skeleton {
  MipcFrame frame;
  std::vector<std::size_t> projection;  // point of the MS4 frame -> its E_R class
};

/// Quotient by E_R with the induced R' and Q'. Classes are numbered by their
/// first member; a class is named by its members joined with '='.
Skeleton skeleton(const Ms4Frame& g);

std::vector<PointSet> q_upsets(const Ms4Frame& f);
std::vector<PointSet> q_upsets(const MipcFrame& f);

/// Induced subframe on a Q-upset. Throws std::invalid_argument otherwise.
Ms4Frame restrict_to(const Ms4Frame& f, PointSet z);
MipcFrame restrict_to(const MipcFrame& f, PointSet z);

/// First bijection (lexicographic search) preserving and reflecting both relations.
std::optional<std::vector<std::size_t>> frames_isomorphic(const Ms4Frame& a, const Ms4Frame& b);
std::optional<std::vector<std::size_t>> frames_isomorphic(const MipcFrame& a, const MipcFrame& b);

/// Some x with Q[x] equal to the whole frame (the E_Q[x] clopen clause is vacuous here).
std::optional<std::size_t> q_root(const Ms4Frame& f);
std::optional<std::size_t> q_root(const MipcFrame& f);

/// Random valid MS4-frame with 1..max_points points. A random quasi-order and
/// partition are repaired until the commutation condition holds.
Ms4Frame random_ms4_frame(std::mt19937_64& rng, std::size_t max_points);

/// Set of point names, e.g. "{v,z}".
std::string format_set(const std::vector<std::string>& points, PointSet s);

}  // namespace monadic
