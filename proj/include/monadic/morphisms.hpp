#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "monadic/algebras.hpp"
#include "monadic/frames.hpp"
#include "monadic/report.hpp"

namespace monadic {

enum class Category { Mipc, Ms4 };
enum class Requirement { Any, Onto, Injective, Iso };

std::string_view to_string(Category c);

struct FrameMorphism {
  Category category = Category::Ms4;
  std::vector<std::size_t> map;  // source point -> target point
  bool onto = false;
  bool injective = false;
};

// Clause ids used in morphism reports.
namespace clause {
inline constexpr const char* kRForth = "R-forth";
inline constexpr const char* kRBack = "R-back";
inline constexpr const char* kEForth = "E-forth";
inline constexpr const char* kEBack = "E-back";
inline constexpr const char* kQForth = "Q-forth";
inline constexpr const char* kQBack = "Q-back";
inline constexpr const char* kQInverse = "Q-inverse";
}  // namespace clause

/// MS4: p-morphism for R and E. MIPC: p-morphism for R and Q together with
/// Q2^{-1}[f(x)] = R2^{-1}[f[Q1^{-1}[x]]]. Witnesses are (x, offending target point).
/// Throws std::invalid_argument if the map is not total into dst.
ValidationReport check_morphism(const Ms4Frame& src, const Ms4Frame& dst,
                                const std::vector<std::size_t>& map);
ValidationReport check_morphism(const MipcFrame& src, const MipcFrame& dst,
                                const std::vector<std::size_t>& map);

/// All morphisms in lexicographic order of the map; limit 0 means no limit.
std::vector<FrameMorphism> enumerate_morphisms(const Ms4Frame& src, const Ms4Frame& dst,
                                               Requirement req, std::size_t limit = 0);
std::vector<FrameMorphism> enumerate_morphisms(const MipcFrame& src, const MipcFrame& dst,
                                               Requirement req, std::size_t limit = 0);

struct SkeletonMorphism {
  FrameMorphism morphism;      // ρ(f) between the skeletons
  bool eq_pmorphism = false;   // p-morphism with respect to E_Q'
  std::optional<std::size_t> witness;  // first skeleton point where that fails
};

/// ρ(f)(π1(x)) = π2(f(x)). Throws std::invalid_argument if f is not an MS4 morphism.
SkeletonMorphism skeleton_morphism(const Ms4Frame& src, const Ms4Frame& dst,
                                   const std::vector<std::size_t>& map);

/// Onto images of a frame, one representative per isomorphism class, as
/// quotients by set partitions of the points (blocks named by their members
/// joined with '+'). Ordered by size, then by discovery.
std::vector<Ms4Frame> onto_images(const Ms4Frame& f);
std::vector<MipcFrame> onto_images(const MipcFrame& f);

/// Strongly Q-rooted onto images of nonempty Q-upsets, up to isomorphism.
std::vector<Ms4Frame> hs_spectrum(const Ms4Frame& f);
std::vector<MipcFrame> hs_spectrum(const MipcFrame& f);
std::vector<Ms4Frame> hs_spectrum(const FiniteMs4Algebra& b);
std::vector<MipcFrame> hs_spectrum(const FiniteMha& a);

/// Some Q-upset of big admits an onto morphism to small.
bool hs_member_frames(const Ms4Frame& small, const Ms4Frame& big);
bool hs_member_frames(const MipcFrame& small, const MipcFrame& big);
bool hs_member(const FiniteMs4Algebra& small, const FiniteMs4Algebra& big);
bool hs_member(const FiniteMha& small, const FiniteMha& big);

/// a1 embeds into a2 iff dual(a2) maps onto dual(a1).
bool embeds(const FiniteMs4Algebra& a1, const FiniteMs4Algebra& a2);
bool embeds(const FiniteMha& a1, const FiniteMha& a2);

/// Frames equal up to isomorphism to some member of the list.
bool contains_isomorphic(const std::vector<Ms4Frame>& list, const Ms4Frame& f);
bool contains_isomorphic(const std::vector<MipcFrame>& list, const MipcFrame& f);

}  // namespace monadic
