#include "monadic/fixtures.hpp"

#include "monadic/io.hpp"

namespace monadic {

Fixtures builtin_fixtures() {
  Fixtures fx;
  fx.k1 = build_ms4_frame({"u", "v", "w", "z"}, {{"u", "v"}, {"u", "w"}, {"v", "z"}, {"w", "z"}},
                          true, {{"v", "z"}, {"w"}, {"u"}});
  fx.k2 = build_ms4_frame({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, true, {{"b", "c"}, {"a"}});
  fx.k3 = build_ms4_frame({"x", "y"}, {{"x", "y"}}, true, {{"x", "y"}});
  fx.k4 = build_ms4_frame({"x", "y"}, {{"x", "y"}}, true, {});
  fx.k5 = build_ms4_frame({"x"}, {}, true, {});
  // b and d form one R-cluster.
  fx.h1 = build_ms4_frame({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}, {"b", "d"}, {"d", "b"}},
                          true, {{"a", "b"}, {"c"}, {"d"}});
  fx.h2 = build_ms4_frame({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}, {"w", "v"}}, true,
                          {{"u", "v"}, {"w"}});
  return fx;
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"K1", "K2", "K3", "K4", "K5", "H1", "H2"};
  return names;
}

std::optional<Ms4Frame> fixture(const Fixtures& fx, std::string_view name) {
  if (name == "K1") return fx.k1;
  if (name == "K2") return fx.k2;
  if (name == "K3") return fx.k3;
  if (name == "K4") return fx.k4;
  if (name == "K5") return fx.k5;
  if (name == "H1") return fx.h1;
  if (name == "H2") return fx.h2;
  return std::nullopt;
}

std::optional<Ms4Frame> fixture(std::string_view name) { return fixture(builtin_fixtures(), name); }

}  // namespace monadic
