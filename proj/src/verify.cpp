#include "monadic/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "monadic/duality.hpp"
#include "monadic/morphisms.hpp"
#include "monadic/semantics.hpp"

namespace monadic {

namespace {

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Check {
  const char* name;
  const char* anchor;
  std::function<Outcome(const Fixtures&)> run;
};

Outcome pass(std::string detail = {}) { return {true, std::move(detail)}; }
Outcome fail(std::string detail) { return {false, std::move(detail)}; }

std::vector<std::pair<std::string, Ms4Frame>> named_frames(const Fixtures& fx) {
  return {{"K1", fx.k1}, {"K2", fx.k2}, {"K3", fx.k3}, {"K4", fx.k4},
          {"K5", fx.k5}, {"H1", fx.h1}, {"H2", fx.h2}};
}

std::string describe(const ValidationReport& r, const std::vector<std::string>& points) {
  const auto& v = r.violations.front();
  std::string out = v.condition + " (";
  for (std::size_t i = 0; i < v.witness.size(); ++i) {
    if (i) out += ',';
    out += v.witness[i] < points.size() ? points[v.witness[i]] : std::to_string(v.witness[i]);
  }
  return out + ")";
}

std::vector<Ms4Frame> random_frames(std::uint64_t seed, std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Ms4Frame> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_ms4_frame(rng, 5));
  return out;
}

constexpr std::uint64_t kFrameSeed = 20240531;
constexpr std::uint64_t kFormulaSeed = 1729;

template <class A>
bool represents(const A& a) {
  const auto map = representation(a);
  const auto back = complex_algebra(dual_frame(a));
  auto sorted = map;
  std::sort(sorted.begin(), sorted.end());
  return back.n == a.n && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
         check_homomorphism(a, back, map).ok();
}

Outcome fixture_validation(const Fixtures& fx) {
  for (const auto& [name, g] : named_frames(fx)) {
    const auto r = validate_frame(g);
    if (!r.ok()) return fail(name + ": " + describe(r, g.points));
    const auto sk = skeleton(g).frame;
    const auto rs = validate_frame(sk);
    if (!rs.ok()) return fail("rho(" + name + "): " + describe(rs, sk.points));
  }
  return pass("7 MS4-frames and their 7 skeletons");
}

Outcome skeletons(const Fixtures& fx) {
  const auto s1 = skeleton(fx.h1).frame;
  if (s1.points != std::vector<std::string>{"a", "b=d", "c"}) return fail("rho(H1) classes differ");
  const auto eq1 = derived_relations(s1).e_q;
  if (!eq1.holds(0, 1) || eq1.holds(0, 2) || eq1.holds(1, 2)) return fail("rho(H1) E_Q' classes differ");

  const auto s2 = skeleton(fx.h2).frame;
  MipcFrame chain{{"x", "y"}, Relation::identity(2), Relation(2)};
  chain.r.set(0, 1);
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y) chain.q.set(x, y);
  }
  if (!frames_isomorphic(s2, chain)) return fail("rho(H2) is not a 2-chain in one E_Q' class");

  for (const auto* g : {&fx.k1, &fx.k2, &fx.k3, &fx.k4, &fx.k5}) {
    if (skeleton(*g).frame.size() != g->size()) return fail("a partially ordered K-frame lost points");
  }
  const auto eq2 = derived_relations(skeleton(fx.k2).frame).e_q;
  if (eq2.successors(0) != singleton(0) || eq2.successors(1) != (singleton(1) | singleton(2))) {
    return fail("rho(K2) E_Q' classes differ");
  }
  return pass("rho(H1) = {a, b=d, c}; rho(H2) = 2-chain cluster");
}

Outcome naturality(const Fixtures& fx) {
  for (const auto& [name, g] : named_frames(fx)) {
    const auto r = check_skeleton_naturality(g);
    if (!r.ok) return fail(name + ": " + r.failing_operation);
  }
  const auto frames = random_frames(kFrameSeed, 100);
  for (std::size_t i = 0; i < frames.size(); ++i) {
    const auto r = check_skeleton_naturality(frames[i]);
    if (!r.ok) return fail("random frame " + std::to_string(i) + ": " + r.failing_operation);
  }
  return pass("7 fixtures + 100 random frames (seed " + std::to_string(kFrameSeed) + ")");
}

Outcome skeleton_not_eq_pmorphism(const Fixtures& fx) {
  const std::vector<std::size_t> f{0, 1, 2, 2};
  const auto r = check_morphism(fx.h1, fx.h2, f);
  if (!r.ok()) return fail("f is not an MS4 morphism: " + describe(r, fx.h1.points));
  const auto sm = skeleton_morphism(fx.h1, fx.h2, f);
  const auto s1 = skeleton(fx.h1).frame;
  const auto rs = check_morphism(s1, skeleton(fx.h2).frame, sm.morphism.map);
  if (!rs.ok()) return fail("rho(f) is not an MIPC morphism: " + describe(rs, s1.points));
  if (sm.eq_pmorphism || !sm.witness) return fail("rho(f) is an E_Q' p-morphism");
  if (s1.points[*sm.witness] != "c") return fail("witness is " + s1.points[*sm.witness]);
  return pass("witness pi1(c)");
}

Outcome key_lemma_mipc(const Fixtures& fx) {
  const auto ms = enumerate_morphisms(skeleton(fx.k1).frame, skeleton(fx.k2).frame, Requirement::Onto);
  const std::vector<std::size_t> expected{0, 1, 2, 2};
  const bool found = std::any_of(ms.begin(), ms.end(), [&](const auto& m) { return m.map == expected; });
  if (!found) return fail(std::to_string(ms.size()) + " onto morphisms, none is u>a v>b w>c z>c");
  return pass(std::to_string(ms.size()) + " onto MIPC morphism(s), including u>a v>b w>c z>c");
}

Outcome key_lemma_ms4(const Fixtures& fx) {
  const auto ups = q_upsets(fx.k1);
  if (ups.size() != 4) return fail(std::to_string(ups.size()) + " Q-upsets of K1");
  for (PointSet z : ups) {
    const auto ms = enumerate_morphisms(restrict_to(fx.k1, z), fx.k2, Requirement::Onto);
    if (!ms.empty()) return fail("onto morphism from " + format_set(fx.k1.points, z));
  }
  return pass("0 onto MS4 morphisms from each of 4 Q-upsets");
}

Outcome ai_bi_embedding(const Fixtures& fx) {
  const auto o1 = open_algebra(complex_algebra(fx.k1)).algebra;
  const auto o2 = open_algebra(complex_algebra(fx.k2)).algebra;
  if (!embeds(o2, o1)) return fail("no onto MIPC morphism dual(O(B1)) -> dual(O(B2))");
  return pass();
}

Outcome ai_bi_hs(const Fixtures& fx) {
  if (hs_member(complex_algebra(fx.k2), complex_algebra(fx.k1))) return fail("B2 in HS(B1)");
  return pass();
}

Outcome ai_bi_exclusion(const Fixtures& fx) {
  const auto b1 = complex_algebra(fx.k1);
  const auto b2 = complex_algebra(fx.k2);
  if (!subdirectly_irreducible(b2)) return fail("B2 is not subdirectly irreducible");
  if (!subdirectly_irreducible(open_algebra(b2).algebra)) return fail("O(B2) is not subdirectly irreducible");
  const auto rho_k2 = skeleton(fx.k2).frame;
  const auto grz = axiom_corpus("grz").front();
  const auto spectrum = hs_spectrum(b1);
  for (const auto& g : spectrum) {
    // Every s.i. member of HS(B1) is an MGrz-algebra with a partially ordered dual.
    if (!g.r.is_antisymmetric()) return fail("a frame in the spectrum of B1 is not partially ordered");
    if (!validates(complex_algebra(g), grz).valid) return fail("grz fails on a spectrum algebra");
    if (frames_isomorphic(skeleton(g).frame, rho_k2)) return fail("rho(G) = rho(K2) for some G in HS(B1)");
  }
  return pass(std::to_string(spectrum.size()) + " s.i. duals in HS(B1), none with skeleton rho(K2)");
}

Outcome s_and_o(const Fixtures& fx) {
  const auto b1 = complex_algebra(fx.k1);
  const auto o2 = open_algebra(complex_algebra(fx.k2)).algebra;
  if (!embeds(o2, open_algebra(b1).algebra)) return fail("O(B2) does not embed into O(B1)");
  const auto subs = subalgebras(b1);
  for (const auto& s : subs) {
    const auto sub = induced_subalgebra(b1, s);
    if (!validate_algebra(sub).ok()) return fail("a subalgebra of B1 fails validation");
    if (find_isomorphism(open_algebra(sub).algebra, o2)) return fail("O of a subalgebra of B1 is O(B2)");
  }
  return pass(std::to_string(subs.size()) + " subalgebras of B1, none with O isomorphic to O(B2)");
}

Outcome so_intersection(const Fixtures& fx) {
  const auto o2 = open_algebra(complex_algebra(fx.k2)).algebra;
  const auto sp1 = hs_spectrum(complex_algebra(fx.k1));
  const auto sp2 = hs_spectrum(complex_algebra(fx.k2));
  std::size_t common = 0;
  for (const auto& g : sp1) {
    if (!contains_isomorphic(sp2, g)) continue;
    ++common;
    if (hs_member(o2, open_algebra(complex_algebra(g)).algebra)) {
      return fail("O(B2) in HS(O(G*)) for a G common to both spectra");
    }
  }
  return pass(std::to_string(common) + " common s.i. duals, O(B2) in HS(O(G*)) for none");
}

Outcome so_not_injective(const Fixtures& fx) {
  const auto b1 = complex_algebra(fx.k1);
  const auto b2 = complex_algebra(fx.k2);
  const auto sp1 = hs_spectrum(open_algebra(b1).algebra);
  const auto sp2 = hs_spectrum(open_algebra(b2).algebra);
  for (const auto& f : sp2) {
    if (!contains_isomorphic(sp1, f)) return fail("spectrum of O(B2) not inside spectrum of O(B1)");
  }
  if (hs_member(b2, b1)) return fail("B2 in HS(B1)");
  return pass("SO(V1 v V2) = SO(V1) while V1 v V2 != V1");
}

Outcome spectra(const Fixtures& fx) {
  const std::vector<Ms4Frame> ks{fx.k2, fx.k3, fx.k4, fx.k5};
  const auto b2 = complex_algebra(fx.k2);
  const auto sp = hs_spectrum(b2);
  if (sp.size() != ks.size()) return fail(std::to_string(sp.size()) + " frames in the spectrum of B2");
  for (const auto& k : ks) {
    if (!contains_isomorphic(sp, k)) return fail("spectrum of B2 misses a K-frame");
  }
  const auto spo = hs_spectrum(open_algebra(b2).algebra);
  if (spo.size() != ks.size()) return fail(std::to_string(spo.size()) + " frames in the spectrum of O(B2)");
  for (const auto& k : ks) {
    if (!contains_isomorphic(spo, skeleton(k).frame)) return fail("spectrum of O(B2) misses a skeleton");
  }
  return pass("{K2,K3,K4,K5} and {rho(K2),..,rho(K5)}");
}

Outcome quantified_disjunction(const Fixtures& fx) {
  const auto b1 = complex_algebra(fx.k1);
  const auto b2 = complex_algebra(fx.k2);
  if (quantified_disjunction_witness(b1) || quantified_disjunction_witness(b2)) {
    return fail("master-modality form fails on B1 or B2");
  }
  if (quantified_disjunction_witness(open_algebra(b1).algebra) ||
      quantified_disjunction_witness(open_algebra(b2).algebra)) {
    return fail("forall form fails on O(B1) or O(B2)");
  }
  const auto k5 = complex_algebra(fx.k5);
  const auto control = product(k5, k5);
  const auto w = quantified_disjunction_witness(control);
  if (!w) return fail("control K5* x K5* has no witness");
  // (0,1) and (1,0) sit at indices 1 and 2.
  if (std::min(w->first, w->second) != 1 || std::max(w->first, w->second) != 2) {
    return fail("control witness differs");
  }
  return pass("control witness ((1,0),(0,1))");
}

Outcome translation(const Fixtures& fx) {
  const auto b1 = complex_algebra(fx.k1);
  const auto b2 = complex_algebra(fx.k2);
  std::mt19937_64 rng(kFormulaSeed);
  std::vector<Formula> corpus = axiom_corpus("mipc");
  for (const auto& ax : corpus) {
    for (const auto* b : {&b1, &b2}) {
      if (!validates(open_algebra(*b).algebra, ax).valid) return fail("axiom fails in O(B): " + print(ax));
    }
  }
  for (int i = 0; i < 200; ++i) corpus.push_back(random_formula(Lang::Int, rng, 4, 3));
  for (const auto& f : corpus) {
    for (const auto* b : {&b1, &b2}) {
      if (!translation_equivalence(*b, f)) return fail("disagreement on " + print(f));
    }
  }
  return pass("9 axioms + 200 random formulas (seed " + std::to_string(kFormulaSeed) + ") on B1, B2");
}

Outcome round_trips(const Fixtures& fx) {
  auto frames = random_frames(kFrameSeed + 1, 100);
  for (const auto& [name, g] : named_frames(fx)) frames.push_back(g);
  for (const auto& g : frames) {
    const auto b = complex_algebra(g);
    if (!frames_isomorphic(dual_frame(b), g)) return fail("dual of G* differs from G");
    if (!represents(b)) return fail("G* differs from the complex algebra of its dual");
    const auto sk = skeleton(g).frame;
    const auto h = complex_algebra(sk);
    if (!frames_isomorphic(dual_frame(h), sk)) return fail("dual of rho(G)* differs from rho(G)");
    if (!represents(h)) return fail("rho(G)* differs from the complex algebra of its dual");
    if (!represents(open_algebra(b).algebra)) return fail("O(G*) differs from its double dual");
  }
  return pass(std::to_string(frames.size()) + " frames, both kinds");
}

Outcome filter_counts(const Fixtures& fx) {
  std::ostringstream detail;
  for (const auto& [name, g] : named_frames(fx)) {
    const auto filters = monadic_filters(complex_algebra(g)).size();
    const auto upsets = q_upsets(g).size();
    if (filters != upsets) return fail(name + ": " + std::to_string(filters) + " filters vs " +
                                       std::to_string(upsets) + " Q-upsets");
  }
  const auto f1 = monadic_filters(complex_algebra(fx.k1)).size();
  const auto f2 = monadic_filters(complex_algebra(fx.k2)).size();
  if (f1 != 4 || f2 != 3) return fail("B1/B2 filter counts " + std::to_string(f1) + "/" + std::to_string(f2));
  return pass("B1/K1: 4, B2/K2: 3");
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all{
      {"fixture-validation", "the descriptive MS4-frames depicted", fixture_validation},
      {"skeletons", "the skeletons rho(H_1) and rho(H_2)", skeletons},
      {"naturality", "commutes up to natural isomorphism", naturality},
      {"skeleton-not-eq-pmorphism", "is not a p-morphism with respect to E_{Q'}",
       skeleton_not_eq_pmorphism},
      {"key-lemma-mipc", "There is an onto DF_MIPC-morphism", key_lemma_mipc},
      {"key-lemma-ms4", "There is no onto DF_MS4-morphism", key_lemma_ms4},
      {"ai-bi-embedding", "O(B_2) embeds into O(B_1)", ai_bi_embedding},
      {"ai-bi-hs", "B_2 is not in HS(B_1)", ai_bi_hs},
      {"ai-bi-exclusion", "O(B_2) is not in O(V_1)", ai_bi_exclusion},
      {"s-o-commute", "S and O do not commute", s_and_o},
      {"so-intersection", "SO does not commute with binary intersections", so_intersection},
      {"so-not-injective", "SO is not one-to-one", so_not_injective},
      {"spectra", "iff G is isomorphic to K_i for i=2,...,5", spectra},
      {"quantified-disjunction", "forall a_1 v forall a_2 = 1 implies", quantified_disjunction},
      {"translation", "O(B) validates phi iff B validates phi^t", translation},
      {"duality-round-trips", "dually equivalent to", round_trips},
      {"filter-upset-counts", "monadic filters of A and closed Q-upsets", filter_counts},
  };
  return all;
}

CheckResult run_check(const Check& c, const Fixtures& fx) {
  CheckResult r{c.name, c.anchor, false, 0.0, {}};
  const auto start = std::chrono::steady_clock::now();
  try {
    const Outcome o = c.run(fx);
    r.passed = o.passed;
    r.detail = o.detail;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

std::vector<std::string> verify_check_names() {
  std::vector<std::string> out;
  for (const auto& c : checks()) out.emplace_back(c.name);
  return out;
}

std::vector<CheckResult> verify_paper(const Fixtures& fx, const VerifyOptions& options) {
  std::vector<const Check*> selected;
  for (const auto& c : checks()) {
    if (options.only.empty() || std::string(c.name).find(options.only) != std::string::npos) {
      selected.push_back(&c);
    }
  }
  std::vector<CheckResult> results;
  if (!options.parallel) {
    for (const auto* c : selected) results.push_back(run_check(*c, fx));
    return results;
  }
  std::vector<std::future<CheckResult>> pending;
  for (const auto* c : selected) {
    pending.push_back(std::async(std::launch::async, [c, &fx] { return run_check(*c, fx); }));
  }
  for (auto& p : pending) results.push_back(p.get());
  return results;
}

}  // namespace monadic
