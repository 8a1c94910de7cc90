#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monadic/frames.hpp"

namespace monadic {

/// The seven finite MS4-frames used throughout: K1, K2 and their HS images
/// K3, K4, K5, and the pair H1, H2 whose skeleton map is not an E_Q' p-morphism.
struct Fixtures {
  Ms4Frame k1, k2, k3, k4, k5, h1, h2;
};

Fixtures builtin_fixtures();

/// K1 K2 K3 K4 K5 H1 H2
const std::vector<std::string>& fixture_names();
std::optional<Ms4Frame> fixture(std::string_view name);
std::optional<Ms4Frame> fixture(const Fixtures& fx, std::string_view name);

}  // namespace monadic
