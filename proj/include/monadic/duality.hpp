#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monadic/algebras.hpp"
#include "monadic/frames.hpp"

namespace monadic {

/// Carrier order of the complex algebra of an MIPC-frame: the R-upsets, size then lex.
std::vector<PointSet> r_upsets(const MipcFrame& f);

/// MS4: all subsets, element index equal to the point-set bitmask.
/// MIPC: the R-upsets in r_upsets order.
/// Throws std::invalid_argument for invalid frames or frames too large to tabulate.
FiniteMs4Algebra complex_algebra(const Ms4Frame& f);
FiniteMha complex_algebra(const MipcFrame& f);

/// Points are the principal prime filters (join-irreducibles, resp. atoms),
/// named by the index of their generator.
MipcFrame dual_frame(const FiniteMha& a);
Ms4Frame dual_frame(const FiniteMs4Algebra& b);

/// Element a to the index in complex_algebra(dual_frame(a)) of the set of dual
/// points containing a.
std::vector<Elem> representation(const FiniteMha& a);
std::vector<Elem> representation(const FiniteMs4Algebra& b);

/// Inverse image f^{-1} as a map of complex algebras dst* -> src*.
std::vector<Elem> inverse_image_map(const Ms4Frame& src, const Ms4Frame& dst,
                                    const std::vector<std::size_t>& map);
std::vector<Elem> inverse_image_map(const MipcFrame& src, const MipcFrame& dst,
                                    const std::vector<std::size_t>& map);

struct NaturalityResult {
  bool ok = false;
  std::string failing_operation;  // empty when ok
};

/// Checks that U -> π^{-1}[U] is an isomorphism of monadic Heyting algebras
/// from the complex algebra of the skeleton onto the open algebra of g*.
NaturalityResult check_skeleton_naturality(const Ms4Frame& g);

}  // namespace monadic
