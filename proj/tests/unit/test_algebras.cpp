#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "../oracles.hpp"
#include "monadic/algebras.hpp"
#include "monadic/duality.hpp"
#include "monadic/fixtures.hpp"
#include "monadic/io.hpp"

using namespace monadic;

namespace {

struct World {
  Fixtures fx = builtin_fixtures();
  FiniteMs4Algebra b1 = complex_algebra(fx.k1);
  FiniteMs4Algebra b2 = complex_algebra(fx.k2);
  FiniteMha o1 = open_algebra(b1).algebra;
  FiniteMha o2 = open_algebra(b2).algebra;
};

const World& world() {
  static const World w;
  return w;
}

// Renumbers the elements: new index of old element a is perm[a].
FiniteMs4Algebra permuted(const FiniteMs4Algebra& b, const std::vector<Elem>& perm) {
  FiniteMs4Algebra out;
  out.n = b.n;
  out.meet = Table(b.n);
  out.join = Table(b.n);
  out.neg.assign(b.n, 0);
  out.box.assign(b.n, 0);
  out.forall.assign(b.n, 0);
  for (Elem a = 0; a < b.n; ++a) {
    out.neg[perm[a]] = perm[b.neg[a]];
    out.box[perm[a]] = perm[b.box[a]];
    out.forall[perm[a]] = perm[b.forall[a]];
    for (Elem c = 0; c < b.n; ++c) {
      out.meet.set(perm[a], perm[c], perm[b.meet(a, c)]);
      out.join.set(perm[a], perm[c], perm[b.join(a, c)]);
    }
  }
  return out;
}

template <class A>
std::vector<Elem> closure_oracle(const A& a, std::vector<Elem> seed,
                                 const std::vector<const std::vector<Elem>*>& unary,
                                 const std::vector<const Table*>& binary) {
  std::set<Elem> s(seed.begin(), seed.end());
  s.insert(a.bot());
  s.insert(a.top());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Elem> now(s.begin(), s.end());
    for (Elem x : now) {
      for (const auto* op : unary) grew |= s.insert((*op)[x]).second;
      for (Elem y : now) {
        for (const auto* t : binary) grew |= s.insert((*t)(x, y)).second;
      }
    }
  }
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("complex and open algebras validate") {
  const auto& w = world();
  CHECK(w.b1.n == 16);
  CHECK(w.b2.n == 8);
  CHECK(validate_algebra(w.b1).ok());
  CHECK(validate_algebra(w.b2).ok());
  CHECK(w.o1.n == 6);
  CHECK(w.o2.n == 4);
  CHECK(validate_algebra(w.o1).ok());
  CHECK(validate_algebra(w.o2).ok());
  for (const auto& name : fixture_names()) {
    const auto b = complex_algebra(*fixture(w.fx, name));
    CHECK(validate_algebra(b).ok());
    CHECK(validate_algebra(open_algebra(b).algebra).ok());
  }
}

TEST_CASE("open elements are the box fixpoints") {
  const auto& w = world();
  for (const auto* b : {&w.b1, &w.b2}) {
    const auto open = open_algebra(*b);
    CHECK(open.inclusion == oracle::fixpoints(b->box));
  }
  // box = identity keeps every element.
  const auto flat = complex_algebra(build_ms4_frame({"x", "y"}, {}, true, {{"x", "y"}}));
  CHECK(open_algebra(flat).algebra.n == flat.n);
}

TEST_CASE("a corrupted box table is caught") {
  auto b = world().b2;
  b.box[6] = 7;  // box{b,c} = Y is no longer deflationary
  const auto r = validate_algebra(b);
  REQUIRE_FALSE(r.ok());
  CHECK(r.has("box-deflationary"));
  for (const auto& v : r.violations) {
    if (v.condition == "box-deflationary") CHECK(v.witness == std::vector<std::size_t>{6});
  }
}

TEST_CASE("lattice and monadic laws are reported by name") {
  auto a = world().o2;
  std::swap(a.forall[1], a.forall[2]);
  CHECK_FALSE(validate_algebra(a).ok());

  auto b = world().b2;
  b.forall[1] = 0;
  CHECK(validate_algebra(b).has("forall-s5"));

  auto c = world().b2;
  c.neg[0] = 0;
  CHECK(validate_algebra(c).has("complement"));

  FiniteMha bad = world().o2;
  bad.exists.pop_back();
  CHECK_THROWS_AS(validate_algebra(bad), std::invalid_argument);
}

TEST_CASE("adjointness agrees with the inequality formulation") {
  const auto& w = world();
  std::vector<FiniteMha> algebras{w.o1, w.o2};
  for (const auto& name : fixture_names()) {
    algebras.push_back(complex_algebra(skeleton(*fixture(w.fx, name)).frame));
  }
  std::mt19937_64 rng(99);
  std::size_t agreed_invalid = 0;
  for (const auto& base : algebras) {
    CHECK(oracle::forall_adjoint_direct(base, base.forall));
    CHECK(oracle::exists_adjoint_direct(base, base.forall, base.exists));
    for (int trial = 0; trial < 300; ++trial) {
      auto a = base;
      const auto k = 1 + rng() % 2;
      for (std::size_t i = 0; i < k; ++i) {
        auto& op = (rng() % 2 == 0) ? a.forall : a.exists;
        op[rng() % a.n] = static_cast<Elem>(rng() % a.n);
      }
      const bool fd = oracle::forall_adjoint_direct(a, a.forall);
      const bool fi = oracle::forall_adjoint_inequalities(a, a.forall);
      const bool ed = oracle::exists_adjoint_direct(a, a.forall, a.exists);
      const bool ei = oracle::exists_adjoint_inequalities(a, a.forall, a.exists);
      CHECK(fd == fi);
      CHECK(ed == ei);
      if (!fi || !ei) {
        CHECK_FALSE(validate_algebra(a).ok());
        ++agreed_invalid;
      }
    }
  }
  CHECK(agreed_invalid > 100);
}

TEST_CASE("normalization moves the bounds") {
  const auto& b2 = world().b2;
  const std::vector<Elem> perm{3, 0, 7, 1, 6, 2, 5, 4};
  const auto shuffled = permuted(b2, perm);
  CHECK_FALSE(validate_algebra(shuffled).ok());
  const auto n = normalized(shuffled);
  CHECK(validate_algebra(n).ok());
  CHECK(find_isomorphism(n, b2).has_value());

  const auto j = algebra_to_json(shuffled);
  const auto back = std::get<FiniteMs4Algebra>(algebra_from_json(j));
  CHECK(validate_algebra(back).ok());
}

TEST_CASE("forall fixpoints") {
  const auto& w = world();
  const auto fix = fixpoint_subalgebra(w.o2);
  CHECK(fix == oracle::fixpoints(w.o2.forall));
  CHECK(fix.size() == 3);
  // bottom, {b,c} and the top of the four-element chain
  REQUIRE(fix.size() == 3);
  CHECK(open_algebra(w.b2).inclusion[fix[1]] == 6);

  CHECK(fixpoint_subalgebra(w.b1) == oracle::fixpoints(w.b1.forall));
  CHECK(fixpoint_subalgebra(w.o1) == oracle::fixpoints(w.o1.forall));

  auto id = w.o2;
  for (Elem a = 0; a < id.n; ++a) id.forall[a] = id.exists[a] = a;
  CHECK(fixpoint_subalgebra(id).size() == id.n);

  auto bad = w.o2;
  bad.exists[0] = 1;
  CHECK_THROWS_AS(fixpoint_subalgebra(bad), std::domain_error);
}

TEST_CASE("monadic filters match subset enumeration") {
  const auto& w = world();
  CHECK(monadic_filters(w.b2).size() == 3);
  CHECK(monadic_filters(w.b1).size() == 4);
  CHECK(oracle::count_monadic_filters(w.b2) == 3);
  CHECK(oracle::count_monadic_filters(w.b1) == 4);
  CHECK(monadic_filters(w.o1).size() == oracle::count_monadic_filters(w.o1));
  CHECK(monadic_filters(w.o2).size() == oracle::count_monadic_filters(w.o2));
  for (const auto& name : fixture_names()) {
    const auto g = *fixture(w.fx, name);
    const auto b = complex_algebra(g);
    CHECK(monadic_filters(b).size() == oracle::count_monadic_filters(b));
    CHECK(monadic_filters(b).size() == q_upsets(g).size());
  }
  for (const auto& f : monadic_filters(w.b1)) {
    CHECK(is_monadic_filter(w.b1, f.elements));
    CHECK(f.contains(w.b1.top()));
    CHECK(f.elements.front() == f.generator);
  }
  const auto all = monadic_filters(w.b2);
  CHECK(all.front().elements.size() == w.b2.n);
  CHECK(all.back().elements == std::vector<Elem>{w.b2.top()});
  CHECK_FALSE(is_monadic_filter(w.b2, {4, 6, 7}));  // {c} is not closed under forall
}

TEST_CASE("quotients") {
  const auto& w = world();
  SUBCASE("by the top filter") {
    const MonadicFilter top{w.b2.top(), {w.b2.top()}};
    const auto q = quotient(w.b2, top);
    CHECK(find_isomorphism(q.algebra, w.b2).has_value());
  }
  SUBCASE("by the filter of {b,c} is the complex algebra of that upset") {
    const auto filters = monadic_filters(w.b2);
    const auto it = std::find_if(filters.begin(), filters.end(),
                                 [](const MonadicFilter& f) { return f.generator == 6; });
    REQUIRE(it != filters.end());
    const auto q = quotient(w.b2, *it);
    CHECK(validate_algebra(q.algebra).ok());
    const auto bc = restrict_to(w.fx.k2, 6);
    CHECK(find_isomorphism(q.algebra, complex_algebra(bc)).has_value());
    CHECK(frames_isomorphic(dual_frame(q.algebra), bc).has_value());
  }
  SUBCASE("open algebra of a quotient") {
    const auto open = open_algebra(w.b1);
    for (const auto& g : monadic_filters(w.b1)) {
      MonadicFilter restricted;
      for (Elem i = 0; i < open.inclusion.size(); ++i) {
        if (g.contains(open.inclusion[i])) restricted.elements.push_back(i);
      }
      restricted.generator = restricted.elements.front();
      const auto left = open_algebra(quotient(w.b1, g).algebra).algebra;
      const auto right = quotient(open.algebra, restricted).algebra;
      CHECK(find_isomorphism(left, right).has_value());
    }
  }
  SUBCASE("non-filters are refused") {
    CHECK_THROWS_AS(quotient(w.b2, MonadicFilter{4, {4, 6, 7}}), std::invalid_argument);
  }
}

TEST_CASE("generated subalgebras") {
  const auto& w = world();
  CHECK(generated_subalgebra(w.b2, {}) == std::vector<Elem>{0, 7});
  std::vector<Elem> everything(w.b1.n);
  for (Elem a = 0; a < w.b1.n; ++a) everything[a] = a;
  CHECK(generated_subalgebra(w.b1, everything) == everything);
  for (Elem atom : atoms(w.b1)) {
    CHECK(generated_subalgebra(w.b1, {atom}) ==
          closure_oracle(w.b1, {atom}, {&w.b1.neg, &w.b1.box, &w.b1.forall}, {&w.b1.meet, &w.b1.join}));
  }
  for (Elem a = 0; a < w.o1.n; ++a) {
    CHECK(generated_subalgebra(w.o1, {a}) ==
          closure_oracle(w.o1, {a}, {&w.o1.forall, &w.o1.exists}, {&w.o1.meet, &w.o1.join, &w.o1.imp}));
  }
  const auto sub = induced_subalgebra(w.b1, generated_subalgebra(w.b1, {1}));
  CHECK(validate_algebra(sub).ok());
  CHECK_THROWS_AS(induced_subalgebra(w.b1, {0, 1, 15}), std::invalid_argument);
}

TEST_CASE("subalgebras match subset enumeration") {
  const auto& w = world();
  CHECK(atoms(w.b2) == std::vector<Elem>{1, 2, 4});
  CHECK(atoms(w.b1) == std::vector<Elem>{1, 2, 4, 8});
  const auto s2 = subalgebras(w.b2);
  const auto s1 = subalgebras(w.b1);
  CHECK(s2.size() == oracle::count_subalgebras(w.b2));
  CHECK(s1.size() == oracle::count_subalgebras(w.b1));
  CHECK(s1.size() == 5);
  CHECK(s2.size() == 3);
  for (const auto& s : s1) CHECK(validate_algebra(induced_subalgebra(w.b1, s)).ok());
  const auto two = complex_algebra(w.fx.k5);
  CHECK(subalgebras(two).size() == 1);
}

TEST_CASE("join-irreducibles") {
  const auto& w = world();
  for (const auto* a : {&w.o1, &w.o2}) {
    std::vector<Elem> brute;
    for (Elem x = 1; x < a->n; ++x) {
      bool split = false;
      for (Elem y = 0; y < a->n && !split; ++y) {
        for (Elem z = 0; z < a->n && !split; ++z) {
          split = y != x && z != x && a->join(y, z) == x;
        }
      }
      if (!split) brute.push_back(x);
    }
    CHECK(join_irreducibles(*a) == brute);
  }
  CHECK(join_irreducibles(w.o1).size() == 4);
}

TEST_CASE("products") {
  const auto& w = world();
  const auto p = product(w.b1, w.b2);
  CHECK(p.n == 128);
  CHECK(validate_algebra(p).ok());
  CHECK(p.meet(3 * 8 + 5, 6 * 8 + 3) == w.b1.meet(3, 6) * 8 + w.b2.meet(5, 3));
  CHECK(find_isomorphism(open_algebra(p).algebra, product(w.o1, w.o2)).has_value());
  CHECK(find_isomorphism(product(w.b2, complex_algebra(Ms4Frame{{}, Relation(0), Relation(0)})), w.b2)
            .has_value());
}

TEST_CASE("subdirect irreducibility") {
  const auto& w = world();
  CHECK(subdirectly_irreducible(w.b1));
  CHECK(subdirectly_irreducible(w.b2));
  CHECK(subdirectly_irreducible(w.o1));
  CHECK(subdirectly_irreducible(w.o2));
  const auto k5 = complex_algebra(w.fx.k5);
  CHECK_FALSE(subdirectly_irreducible(product(k5, k5)));
  CHECK_FALSE(subdirectly_irreducible(product(w.b1, w.b2)));
}

TEST_CASE("quantified disjunction") {
  const auto& w = world();
  CHECK_FALSE(quantified_disjunction_witness(w.b1).has_value());
  CHECK_FALSE(quantified_disjunction_witness(w.b2).has_value());
  CHECK_FALSE(quantified_disjunction_witness(w.o1).has_value());
  CHECK_FALSE(quantified_disjunction_witness(w.o2).has_value());

  const auto k5 = complex_algebra(w.fx.k5);
  const auto p = product(k5, k5);
  const auto wit = quantified_disjunction_witness(p);
  REQUIRE(wit.has_value());
  // (0,1) and (1,0)
  CHECK(std::set<Elem>{wit->first, wit->second} == std::set<Elem>{1, 2});

  // Brute force over all pairs of every fixture algebra.
  for (const auto& name : fixture_names()) {
    const auto b = complex_algebra(*fixture(w.fx, name));
    bool broken = false;
    for (Elem x = 0; x < b.n; ++x) {
      for (Elem y = 0; y < b.n; ++y) {
        if (b.join(b.master(x), b.master(y)) == b.top() && x != b.top() && y != b.top()) broken = true;
      }
    }
    CHECK(broken == quantified_disjunction_witness(b).has_value());
    CHECK(broken != subdirectly_irreducible(b));
  }
}

TEST_CASE("homomorphisms and isomorphisms") {
  const auto& w = world();
  std::vector<Elem> id(w.b2.n);
  for (Elem a = 0; a < w.b2.n; ++a) id[a] = a;
  CHECK(check_homomorphism(w.b2, w.b2, id).ok());
  auto broken = id;
  std::swap(broken[1], broken[2]);
  CHECK_FALSE(check_homomorphism(w.b2, w.b2, broken).ok());
  std::vector<Elem> constant(w.b2.n, 0);
  CHECK(check_homomorphism(w.b2, w.b2, constant).has("bounds"));

  CHECK_FALSE(find_isomorphism(w.o1, w.o2).has_value());
  const auto iso = find_isomorphism(w.o1, w.o1);
  REQUIRE(iso.has_value());
  CHECK(check_homomorphism(w.o1, w.o1, *iso).ok());
}
