#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "monadic/algebras.hpp"
#include "monadic/fixtures.hpp"
#include "monadic/frames.hpp"

namespace monadic {

using Object = std::variant<Ms4Frame, MipcFrame, FiniteMs4Algebra, FiniteMha>;

/// Resolves a command-line reference:
///   K1..K5 H1 H2    built-in MS4-frames
///   B1 B2           K1* and K2*
///   rho(X)          skeleton of an MS4-frame
///   X*              complex algebra of a frame
///   O(X)            open algebra of an MS4-algebra
///   dual(X)         dual frame of an algebra
///   path.json       frame or algebra file
/// Throws std::invalid_argument for anything else.
Object resolve(std::string_view ref, const Fixtures& fx);
Object resolve(std::string_view ref);

std::string kind_name(const Object& o);

}  // namespace monadic
