#include "monadic/registry.hpp"

#include <filesystem>
#include <stdexcept>

#include "monadic/duality.hpp"
#include "monadic/io.hpp"

namespace monadic {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

// "name(inner)" -> inner, when the outer parentheses match.
bool unwrap(std::string_view s, std::string_view name, std::string_view& inner) {
  if (s.size() < name.size() + 2 || s.substr(0, name.size()) != name) return false;
  if (s[name.size()] != '(' || s.back() != ')') return false;
  inner = s.substr(name.size() + 1, s.size() - name.size() - 2);
  int depth = 0;
  for (char c : inner) {
    depth += c == '(' ? 1 : c == ')' ? -1 : 0;
    if (depth < 0) return false;
  }
  return depth == 0;
}

[[noreturn]] void wrong(std::string_view ref, const char* expected) {
  throw std::invalid_argument("'" + std::string(ref) + "' needs " + expected);
}

}  // namespace

Object resolve(std::string_view ref, const Fixtures& fx) {
  ref = trim(ref);
  if (auto f = fixture(fx, ref)) return *f;
  if (ref == "B1") return complex_algebra(fx.k1);
  if (ref == "B2") return complex_algebra(fx.k2);

  std::string_view inner;
  if (unwrap(ref, "rho", inner)) {
    const Object o = resolve(inner, fx);
    if (const auto* g = std::get_if<Ms4Frame>(&o)) return skeleton(*g).frame;
    wrong(ref, "an MS4-frame inside rho(...)");
  }
  if (unwrap(ref, "O", inner)) {
    const Object o = resolve(inner, fx);
    if (const auto* b = std::get_if<FiniteMs4Algebra>(&o)) return open_algebra(*b).algebra;
    wrong(ref, "an MS4-algebra inside O(...)");
  }
  if (unwrap(ref, "dual", inner)) {
    const Object o = resolve(inner, fx);
    if (const auto* b = std::get_if<FiniteMs4Algebra>(&o)) return dual_frame(*b);
    if (const auto* a = std::get_if<FiniteMha>(&o)) return dual_frame(*a);
    wrong(ref, "an algebra inside dual(...)");
  }
  if (!ref.empty() && ref.back() == '*') {
    const Object o = resolve(ref.substr(0, ref.size() - 1), fx);
    if (const auto* g = std::get_if<Ms4Frame>(&o)) return complex_algebra(*g);
    if (const auto* f = std::get_if<MipcFrame>(&o)) return complex_algebra(*f);
    wrong(ref, "a frame before '*'");
  }
  if (unwrap(ref, "", inner)) return resolve(inner, fx);

  const std::string path(ref);
  if (std::filesystem::is_regular_file(path)) {
    const Json j = read_json_file(path);
    if (j.contains("points")) {
      return std::visit([](auto&& f) -> Object { return f; }, frame_from_json(j));
    }
    return std::visit([](auto&& a) -> Object { return a; }, algebra_from_json(j));
  }
  throw std::invalid_argument("unknown reference '" + path + "'");
}

Object resolve(std::string_view ref) { return resolve(ref, builtin_fixtures()); }

std::string kind_name(const Object& o) {
  switch (o.index()) {
    case 0: return "ms4-frame";
    case 1: return "mipc-frame";
    case 2: return "ms4-algebra";
    default: return "mha";
  }
}

}  // namespace monadic
