// Command-line front end for the monadic library.

#include <CLI11.hpp>

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "monadic/duality.hpp"
#include "monadic/io.hpp"
#include "monadic/morphisms.hpp"
#include "monadic/registry.hpp"
#include "monadic/semantics.hpp"
#include "monadic/verify.hpp"

using namespace monadic;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

bool g_json = false;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

template <class T>
const T& expect(const Object& o, const std::string& ref, const char* what) {
  if (const auto* p = std::get_if<T>(&o)) return *p;
  throw UsageError("'" + ref + "' is a " + kind_name(o) + ", expected " + what);
}
template <class T>
const T& expect(Object&&, const std::string&, const char*) = delete;

std::string relation_row(const std::vector<std::string>& points, const Relation& r, std::size_t x) {
  return format_set(points, r.successors(x));
}

void print_frame(const Ms4Frame& f) {
  std::cout << "ms4-frame, " << f.size() << " point(s)\n";
  const auto q = q_relation(f);
  for (std::size_t x = 0; x < f.size(); ++x) {
    std::cout << "  " << f.points[x] << ": R=" << relation_row(f.points, f.r, x)
              << " E=" << relation_row(f.points, f.e, x) << " Q=" << relation_row(f.points, q, x)
              << "\n";
  }
}

void print_frame(const MipcFrame& f) {
  std::cout << "mipc-frame, " << f.size() << " point(s)\n";
  for (std::size_t x = 0; x < f.size(); ++x) {
    std::cout << "  " << f.points[x] << ": R=" << relation_row(f.points, f.r, x)
              << " Q=" << relation_row(f.points, f.q, x) << "\n";
  }
}

std::string label(const std::vector<std::string>& labels, Elem i) {
  return labels.empty() ? std::to_string(i) : labels[i];
}

void print_algebra(const FiniteMs4Algebra& b) {
  std::cout << "ms4-algebra, " << b.n << " element(s)\n";
  for (Elem i = 0; i < b.n; ++i) {
    std::cout << "  " << i << " " << label(b.labels, i) << ": box=" << b.box[i] << " A=" << b.forall[i]
              << " neg=" << b.neg[i] << "\n";
  }
}

void print_algebra(const FiniteMha& a) {
  std::cout << "mha, " << a.n << " element(s)\n";
  for (Elem i = 0; i < a.n; ++i) {
    std::cout << "  " << i << " " << label(a.labels, i) << ": A=" << a.forall[i] << " E=" << a.exists[i]
              << "\n";
  }
}

void show(const Object& o) {
  std::visit(
      [](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if (g_json) {
          if constexpr (std::is_same_v<T, Ms4Frame> || std::is_same_v<T, MipcFrame>) {
            emit(frame_to_json(x));
          } else {
            emit(algebra_to_json(x));
          }
        } else if constexpr (std::is_same_v<T, Ms4Frame> || std::is_same_v<T, MipcFrame>) {
          print_frame(x);
        } else {
          print_algebra(x);
        }
      },
      o);
}

int report_result(const ValidationReport& r, const std::vector<std::string>& names) {
  if (g_json) {
    emit(report_to_json(r));
  } else if (r.ok()) {
    std::cout << "ok\n";
  } else {
    for (const auto& v : r.violations) {
      std::cout << "violation: " << v.condition << " (";
      for (std::size_t i = 0; i < v.witness.size(); ++i) {
        if (i) std::cout << ",";
        std::cout << (v.witness[i] < names.size() ? names[v.witness[i]] : std::to_string(v.witness[i]));
      }
      std::cout << ")\n";
    }
  }
  return r.ok() ? kOk : kFalse;
}

int predicate(const char* key, bool value) {
  if (g_json) {
    emit(Json{{key, value}});
  } else {
    std::cout << (value ? "true" : "false") << "\n";
  }
  return value ? kOk : kFalse;
}

std::vector<std::string> element_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::string map_text(const std::vector<std::string>& from, const std::vector<std::string>& to,
                     const std::vector<std::size_t>& map) {
  std::string out;
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (x) out += ' ';
    out += from[x] + ">" + to[map[x]];
  }
  return out;
}

Json valuation_json(const Valuation& v) {
  Json j = Json::object();
  for (const auto& [k, e] : v) j[k] = e;
  return j;
}

std::string valuation_text(const Valuation& v) {
  std::string out;
  for (const auto& [k, e] : v) out += (out.empty() ? "" : " ") + k + "=" + std::to_string(e);
  return out;
}

Requirement requirement(bool onto, bool iso, bool injective) {
  if (static_cast<int>(onto) + static_cast<int>(iso) + static_cast<int>(injective) > 1) {
    throw UsageError("choose at most one of --onto, --iso, --injective");
  }
  return iso ? Requirement::Iso : onto ? Requirement::Onto : injective ? Requirement::Injective : Requirement::Any;
}

template <class Frame>
int list_morphisms(const Frame& src, const Frame& dst, Requirement req, std::size_t limit) {
  const auto ms = enumerate_morphisms(src, dst, req, limit);
  if (g_json) {
    Json arr = Json::array();
    for (const auto& m : ms) {
      arr.push_back({{"category", to_string(m.category)}, {"map", m.map}, {"onto", m.onto},
                     {"injective", m.injective}});
    }
    emit(arr);
  } else {
    std::cout << ms.size() << " morphism(s)\n";
    for (const auto& m : ms) std::cout << "  " << map_text(src.points, dst.points, m.map) << "\n";
  }
  return kOk;
}

template <class Frame>
void print_spectrum(const std::vector<Frame>& frames) {
  if (g_json) {
    Json arr = Json::array();
    for (const auto& f : frames) arr.push_back(frame_to_json(f));
    emit(arr);
    return;
  }
  std::cout << frames.size() << " frame(s)\n";
  for (const auto& f : frames) print_frame(f);
}

int translation_check(const FiniteMs4Algebra& b, const Formula& f) {
  const bool left = validates(open_algebra(b).algebra, f).valid;
  const bool right = validates(b, godel_translate(f)).valid;
  if (g_json) {
    emit({{"formula", print(f)}, {"open_algebra_validates", left}, {"translation_validates", right},
          {"agree", left == right}});
  } else {
    std::cout << print(f) << ": O(B) " << (left ? "validates" : "refutes") << ", B "
              << (right ? "validates" : "refutes") << " the translation -> "
              << (left == right ? "agree" : "DISAGREE") << "\n";
  }
  return left == right ? kOk : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite monadic Heyting and MS4 algebras, their frames, and the checks built on them"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g_json, "structured output");

  std::string text, lang = "int", ref_a, ref_b, category, only, pattern;
  bool onto = false, iso = false, injective = false, parallel = false, timings = false;
  std::size_t limit = 0, filter_index = 0, random_count = 0, depth = 4, vars = 3, max_vars = 4;
  std::uint64_t seed = 1;
  std::string format = "dot";
  std::function<int()> action;

  auto* parse = app.add_subcommand("parse", "parse and print a formula");
  parse->add_option("--lang", lang, "int or mod")->check(CLI::IsMember({"int", "mod"}));
  parse->add_option("formula", text)->required();
  parse->callback([&] {
    action = [&] {
      const Formula f = parse_formula(text, parse_lang(lang));
      if (g_json) {
        emit({{"formula", print(f)}, {"lang", to_string(f.lang())}, {"depth", f.depth()},
              {"variables", f.variables()}});
      } else {
        std::cout << print(f) << "\n";
      }
      return kOk;
    };
  });

  auto* translate = app.add_subcommand("translate", "translate an intuitionistic formula");
  translate->add_option("formula", text)->required();
  translate->callback([&] {
    action = [&] {
      const Formula t = godel_translate(parse_formula(text, Lang::Int));
      if (g_json) {
        emit({{"translation", print(t)}});
      } else {
        std::cout << print(t) << "\n";
      }
      return kOk;
    };
  });

  // frame ...
  auto* frame = app.add_subcommand("frame", "frame operations");
  frame->require_subcommand(1);
  auto* frame_check = frame->add_subcommand("check", "validate a frame");
  frame_check->add_option("frame", ref_a)->required();
  frame_check->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      if (const auto* g = std::get_if<Ms4Frame>(&o)) return report_result(validate_frame(*g), g->points);
      const auto& f = expect<MipcFrame>(o, ref_a, "a frame");
      return report_result(validate_frame(f), f.points);
    };
  });
  auto* frame_skeleton = frame->add_subcommand("skeleton", "skeleton of an MS4-frame");
  frame_skeleton->add_option("frame", ref_a)->required();
  frame_skeleton->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      const auto& g = expect<Ms4Frame>(o, ref_a, "an MS4-frame");
      const Skeleton sk = skeleton(g);
      if (g_json) {
        Json proj = Json::object();
        for (std::size_t x = 0; x < g.size(); ++x) proj[g.points[x]] = sk.frame.points[sk.projection[x]];
        emit({{"frame", frame_to_json(sk.frame)}, {"projection", proj}});
      } else {
        print_frame(sk.frame);
      }
      return kOk;
    };
  });
  auto* frame_upsets = frame->add_subcommand("upsets", "Q-upsets of a frame");
  frame_upsets->add_option("frame", ref_a)->required();
  frame_upsets->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      std::vector<PointSet> ups;
      std::vector<std::string> points;
      if (const auto* g = std::get_if<Ms4Frame>(&o)) {
        ups = q_upsets(*g);
        points = g->points;
      } else {
        const auto& f = expect<MipcFrame>(o, ref_a, "a frame");
        ups = q_upsets(f);
        points = f.points;
      }
      if (g_json) {
        Json arr = Json::array();
        for (PointSet u : ups) {
          Json s = Json::array();
          for_each_member(u, [&](std::size_t i) { s.push_back(points[i]); });
          arr.push_back(std::move(s));
        }
        emit(arr);
      } else {
        for (PointSet u : ups) std::cout << format_set(points, u) << "\n";
      }
      return kOk;
    };
  });
  auto* frame_complex = frame->add_subcommand("complex", "complex algebra of a frame");
  frame_complex->add_option("frame", ref_a)->required();
  frame_complex->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      if (const auto* g = std::get_if<Ms4Frame>(&o)) {
        show(complex_algebra(*g));
      } else {
        show(complex_algebra(expect<MipcFrame>(o, ref_a, "a frame")));
      }
      return kOk;
    };
  });
  auto* frame_morphisms = frame->add_subcommand("morphisms", "enumerate frame morphisms");
  frame_morphisms->add_option("src", ref_a)->required();
  frame_morphisms->add_option("dst", ref_b)->required();
  frame_morphisms->add_option("--category", category, "mipc or ms4 (default: from the frames)")
      ->check(CLI::IsMember({"mipc", "ms4"}));
  frame_morphisms->add_flag("--onto", onto);
  frame_morphisms->add_flag("--iso", iso);
  frame_morphisms->add_flag("--injective", injective);
  frame_morphisms->add_option("--limit", limit, "stop after this many (0: all)");
  frame_morphisms->callback([&] {
    action = [&] {
      const Requirement req = requirement(onto, iso, injective);
      const Object src = resolve(ref_a);
      const Object dst = resolve(ref_b);
      const bool mipc = category.empty() ? std::holds_alternative<MipcFrame>(src) : category == "mipc";
      if (mipc) {
        return list_morphisms(expect<MipcFrame>(src, ref_a, "an MIPC-frame"),
                              expect<MipcFrame>(dst, ref_b, "an MIPC-frame"), req, limit);
      }
      return list_morphisms(expect<Ms4Frame>(src, ref_a, "an MS4-frame"),
                            expect<Ms4Frame>(dst, ref_b, "an MS4-frame"), req, limit);
    };
  });

  // algebra ...
  auto* algebra = app.add_subcommand("algebra", "algebra operations");
  algebra->require_subcommand(1);
  auto* alg_check = algebra->add_subcommand("check", "validate an algebra");
  alg_check->add_option("algebra", ref_a)->required();
  alg_check->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      if (const auto* b = std::get_if<FiniteMs4Algebra>(&o)) {
        return report_result(validate_algebra(*b), element_names(b->n));
      }
      const auto& a = expect<FiniteMha>(o, ref_a, "an algebra");
      return report_result(validate_algebra(a), element_names(a.n));
    };
  });
  auto* alg_from_frame = algebra->add_subcommand("from-frame", "complex algebra of a frame");
  alg_from_frame->add_option("frame", ref_a)->required();
  alg_from_frame->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      if (const auto* g = std::get_if<Ms4Frame>(&o)) {
        show(complex_algebra(*g));
      } else {
        show(complex_algebra(expect<MipcFrame>(o, ref_a, "a frame")));
      }
      return kOk;
    };
  });
  auto* alg_open = algebra->add_subcommand("open", "open-element algebra O(B)");
  alg_open->add_option("algebra", ref_a)->required();
  alg_open->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      show(open_algebra(expect<FiniteMs4Algebra>(o, ref_a, "an MS4-algebra")).algebra);
      return kOk;
    };
  });
  auto* alg_dual = algebra->add_subcommand("dual", "dual frame of an algebra");
  alg_dual->add_option("algebra", ref_a)->required();
  alg_dual->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      if (const auto* b = std::get_if<FiniteMs4Algebra>(&o)) {
        show(dual_frame(*b));
      } else {
        show(dual_frame(expect<FiniteMha>(o, ref_a, "an algebra")));
      }
      return kOk;
    };
  });
  auto* alg_filters = algebra->add_subcommand("filters", "monadic filters");
  alg_filters->add_option("algebra", ref_a)->required();
  alg_filters->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      const auto filters = std::holds_alternative<FiniteMs4Algebra>(o)
                               ? monadic_filters(std::get<FiniteMs4Algebra>(o))
                               : monadic_filters(expect<FiniteMha>(o, ref_a, "an algebra"));
      if (g_json) {
        Json arr = Json::array();
        for (const auto& f : filters) arr.push_back({{"generator", f.generator}, {"elements", f.elements}});
        emit(arr);
      } else {
        for (std::size_t i = 0; i < filters.size(); ++i) {
          std::cout << i << ": generated by " << filters[i].generator << ", " << filters[i].elements.size()
                    << " element(s)\n";
        }
      }
      return kOk;
    };
  });
  auto* alg_quotient = algebra->add_subcommand("quotient", "quotient by a monadic filter");
  alg_quotient->add_option("algebra", ref_a)->required();
  alg_quotient->add_option("--filter", filter_index, "index in the 'algebra filters' listing")->required();
  alg_quotient->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      auto run = [&](const auto& a) {
        const auto filters = monadic_filters(a);
        if (filter_index >= filters.size()) throw UsageError("filter index out of range");
        const auto q = quotient(a, filters[filter_index]);
        if (g_json) {
          emit({{"algebra", algebra_to_json(q.algebra)}, {"projection", q.projection}});
        } else {
          print_algebra(q.algebra);
        }
        return kOk;
      };
      if (const auto* b = std::get_if<FiniteMs4Algebra>(&o)) return run(*b);
      return run(expect<FiniteMha>(o, ref_a, "an algebra"));
    };
  });
  auto* alg_product = algebra->add_subcommand("product", "product of two algebras");
  alg_product->add_option("a", ref_a)->required();
  alg_product->add_option("b", ref_b)->required();
  alg_product->callback([&] {
    action = [&] {
      const Object a = resolve(ref_a);
      const Object b = resolve(ref_b);
      if (const auto* x = std::get_if<FiniteMs4Algebra>(&a)) {
        show(product(*x, expect<FiniteMs4Algebra>(b, ref_b, "an MS4-algebra")));
      } else {
        show(product(expect<FiniteMha>(a, ref_a, "an algebra"), expect<FiniteMha>(b, ref_b, "an MHA")));
      }
      return kOk;
    };
  });
  auto* alg_si = algebra->add_subcommand("si", "subdirect irreducibility");
  alg_si->add_option("algebra", ref_a)->required();
  alg_si->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      if (const auto* b = std::get_if<FiniteMs4Algebra>(&o)) {
        return predicate("subdirectly_irreducible", subdirectly_irreducible(*b));
      }
      return predicate("subdirectly_irreducible",
                       subdirectly_irreducible(expect<FiniteMha>(o, ref_a, "an algebra")));
    };
  });
  auto* alg_validate = algebra->add_subcommand("validate-formula", "validity of a formula");
  alg_validate->add_option("algebra", ref_a)->required();
  alg_validate->add_option("formula", text)->required();
  alg_validate->add_option("--lang", lang, "int or mod (default: from the algebra)");
  alg_validate->add_option("--max-vars", max_vars, "refuse formulas with more variables");
  alg_validate->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      const bool modal = std::holds_alternative<FiniteMs4Algebra>(o);
      const Lang l = alg_validate->count("--lang") ? parse_lang(lang) : modal ? Lang::Mod : Lang::Int;
      const Formula f = parse_formula(text, l);
      const Validity v = modal ? validates(std::get<FiniteMs4Algebra>(o), f, max_vars)
                               : validates(expect<FiniteMha>(o, ref_a, "an algebra"), f, max_vars);
      if (g_json) {
        Json j{{"valid", v.valid}};
        if (v.counter) j["counter"] = valuation_json(*v.counter);
        emit(j);
      } else {
        std::cout << (v.valid ? "valid" : "not valid");
        if (v.counter) std::cout << "; counter-valuation " << valuation_text(*v.counter);
        std::cout << "\n";
      }
      return v.valid ? kOk : kFalse;
    };
  });
  auto* alg_embeds = algebra->add_subcommand("embeds", "does a1 embed into a2");
  alg_embeds->add_option("a1", ref_a)->required();
  alg_embeds->add_option("a2", ref_b)->required();
  alg_embeds->callback([&] {
    action = [&] {
      const Object a = resolve(ref_a);
      const Object b = resolve(ref_b);
      if (const auto* x = std::get_if<FiniteMs4Algebra>(&a)) {
        return predicate("embeds", embeds(*x, expect<FiniteMs4Algebra>(b, ref_b, "an MS4-algebra")));
      }
      return predicate("embeds", embeds(expect<FiniteMha>(a, ref_a, "an algebra"),
                                        expect<FiniteMha>(b, ref_b, "an MHA")));
    };
  });

  // variety ...
  auto* variety = app.add_subcommand("variety", "HS membership and s.i. spectra");
  variety->require_subcommand(1);
  auto* hs = variety->add_subcommand("hs-member", "is a in HS(b)");
  hs->add_option("a", ref_a)->required();
  hs->add_option("b", ref_b)->required();
  hs->callback([&] {
    action = [&] {
      const Object a = resolve(ref_a);
      const Object b = resolve(ref_b);
      if (const auto* x = std::get_if<FiniteMs4Algebra>(&a)) {
        return predicate("hs_member", hs_member(*x, expect<FiniteMs4Algebra>(b, ref_b, "an MS4-algebra")));
      }
      return predicate("hs_member", hs_member(expect<FiniteMha>(a, ref_a, "an algebra"),
                                              expect<FiniteMha>(b, ref_b, "an MHA")));
    };
  });
  auto* spectrum = variety->add_subcommand("spectrum", "duals of the s.i. algebras in HS(a)");
  spectrum->add_option("algebra", ref_a)->required();
  spectrum->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      if (const auto* b = std::get_if<FiniteMs4Algebra>(&o)) {
        print_spectrum(hs_spectrum(*b));
      } else {
        print_spectrum(hs_spectrum(expect<FiniteMha>(o, ref_a, "an algebra")));
      }
      return kOk;
    };
  });

  // check translation
  auto* check = app.add_subcommand("check", "differential checks");
  check->require_subcommand(1);
  auto* check_tr = check->add_subcommand("translation", "O(B) validates f iff B validates its translation");
  check_tr->add_option("algebra", ref_a)->required();
  check_tr->add_option("formula", text);
  check_tr->add_option("--random", random_count, "number of random formulas");
  check_tr->add_option("--seed", seed);
  check_tr->add_option("--depth", depth);
  check_tr->add_option("--vars", vars);
  check_tr->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      const auto& b = expect<FiniteMs4Algebra>(o, ref_a, "an MS4-algebra");
      if (text.empty() == (random_count == 0)) throw UsageError("give a formula or --random N");
      if (!text.empty()) return translation_check(b, parse_formula(text, Lang::Int));
      std::mt19937_64 rng(seed);
      std::size_t disagreements = 0;
      for (std::size_t i = 0; i < random_count; ++i) {
        if (!translation_equivalence(b, random_formula(Lang::Int, rng, depth, vars))) ++disagreements;
      }
      if (g_json) {
        emit({{"seed", seed}, {"formulas", random_count}, {"disagreements", disagreements}});
      } else {
        std::cout << "seed " << seed << ": " << random_count << " formula(s), " << disagreements
                  << " disagreement(s)\n";
      }
      return disagreements == 0 ? kOk : kFalse;
    };
  });

  auto* verify = app.add_subcommand("verify", "single checks");
  verify->require_subcommand(1);
  auto* naturality = verify->add_subcommand("naturality", "skeleton naturality square");
  naturality->add_option("frame", ref_a)->required();
  naturality->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      const auto r = check_skeleton_naturality(expect<Ms4Frame>(o, ref_a, "an MS4-frame"));
      if (g_json) {
        emit({{"ok", r.ok}, {"failing_operation", r.failing_operation}});
      } else {
        std::cout << (r.ok ? "ok" : "fails at " + r.failing_operation) << "\n";
      }
      return r.ok ? kOk : kFalse;
    };
  });

  auto* render = app.add_subcommand("render", "draw a frame");
  render->add_option("frame", ref_a)->required();
  render->add_option("--format", format)->check(CLI::IsMember({"dot"}));
  render->callback([&] {
    action = [&] {
      const Object o = resolve(ref_a);
      if (const auto* g = std::get_if<Ms4Frame>(&o)) {
        std::cout << render_dot(*g, ref_a);
      } else {
        std::cout << render_dot(expect<MipcFrame>(o, ref_a, "a frame"), ref_a);
      }
      return kOk;
    };
  });

  auto* fixture_cmd = app.add_subcommand("fixture", "built-in frames");
  fixture_cmd->require_subcommand(1);
  auto* fixture_list = fixture_cmd->add_subcommand("list", "list built-in frames");
  fixture_list->callback([&] {
    action = [&] {
      if (g_json) {
        emit(fixture_names());
      } else {
        for (const auto& n : fixture_names()) std::cout << n << "\n";
      }
      return kOk;
    };
  });
  auto* fixture_dump = fixture_cmd->add_subcommand("dump", "print a built-in frame as JSON");
  fixture_dump->add_option("name", ref_a)->required();
  fixture_dump->callback([&] {
    action = [&] {
      const auto f = fixture(ref_a);
      if (!f) throw UsageError("unknown fixture '" + ref_a + "'");
      emit(frame_to_json(*f));
      return kOk;
    };
  });

  auto* verify_paper_cmd = app.add_subcommand("verify-paper", "run every end-to-end check");
  verify_paper_cmd->add_option("--only", only, "run checks whose name contains this text");
  verify_paper_cmd->add_flag("--parallel", parallel, "run checks concurrently");
  verify_paper_cmd->add_flag("--timings", timings, "include elapsed times");
  verify_paper_cmd->callback([&] {
    action = [&] {
      const auto results = verify_paper(builtin_fixtures(), {only, parallel});
      if (results.empty()) throw UsageError("no check matches '" + only + "'");
      bool all = true;
      Json arr = Json::array();
      for (const auto& r : results) {
        all = all && r.passed;
        if (g_json) {
          Json j{{"name", r.name}, {"anchor", r.anchor}, {"passed", r.passed}, {"detail", r.detail}};
          if (timings) j["seconds"] = r.seconds;
          arr.push_back(std::move(j));
          continue;
        }
        std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(26) << r.name << " \""
                  << r.anchor << "\"";
        if (timings) std::cout << " " << std::fixed << std::setprecision(3) << r.seconds << "s";
        if (!r.detail.empty()) std::cout << "  " << r.detail;
        std::cout << "\n";
      }
      if (g_json) {
        emit({{"passed", all}, {"checks", arr}});
      } else {
        std::cout << (all ? "all checks passed" : "FAILED") << "\n";
      }
      return all ? kOk : kFalse;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action ? action() : kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
