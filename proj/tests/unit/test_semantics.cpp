#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "monadic/duality.hpp"
#include "monadic/fixtures.hpp"
#include "monadic/semantics.hpp"

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

Formula I(const char* s) { return parse_formula(s, Lang::Int); }
Formula M(const char* s) { return parse_formula(s, Lang::Mod); }

}  // namespace

TEST_CASE("evaluation matches direct recursion") {
  const auto& w = world();
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_formula(Lang::Int, rng, 4, 3);
    const auto g = random_formula(Lang::Mod, rng, 4, 3);
    Valuation v{{"p", static_cast<Elem>(rng() % w.o1.n)},
                {"q", static_cast<Elem>(rng() % w.o1.n)},
                {"r", static_cast<Elem>(rng() % w.o1.n)}};
    CHECK(evaluate(w.o1, v, f) == oracle::eval(w.o1, v, f));
    Valuation u{{"p", static_cast<Elem>(rng() % w.b1.n)},
                {"q", static_cast<Elem>(rng() % w.b1.n)},
                {"r", static_cast<Elem>(rng() % w.b1.n)}};
    CHECK(evaluate(w.b1, u, g) == oracle::eval(w.b1, u, g));
  }
}

TEST_CASE("evaluation basics") {
  const auto& w = world();
  CHECK(evaluate(w.o2, {{"p", w.o2.top()}}, I("A p")) == w.o2.top());
  for (Elem a = 0; a < w.b2.n; ++a) {
    CHECK(evaluate(w.b2, {{"p", a}}, M("box A p -> A box p")) == w.b2.top());
  }
  CHECK_THROWS_AS(evaluate(w.o2, {}, I("p")), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(w.o2, {{"p", 0}}, M("p")), std::invalid_argument);
  CHECK_THROWS_AS(evaluate(w.o2, {{"p", 99}}, I("p")), std::invalid_argument);
}

TEST_CASE("grz holds on the finite fixture algebras") {
  const auto& w = world();
  const auto grz = axiom_corpus("grz").front();
  CHECK(validates(w.b1, grz).valid);
  CHECK(validates(w.b2, grz).valid);
  for (Elem a : atoms(w.b1)) CHECK(evaluate(w.b1, {{"p", a}}, grz) == w.b1.top());
  // H1 has a proper R-cluster, so grz fails there.
  CHECK_FALSE(validates(complex_algebra(w.fx.h1), grz).valid);
}

TEST_CASE("axiom corpora are valid where they should be") {
  const auto& w = world();
  for (const auto& f : axiom_corpus("mipc")) {
    CHECK(validates(w.o1, f).valid);
    CHECK(validates(w.o2, f).valid);
  }
  for (const auto& name : fixture_names()) {
    const auto b = complex_algebra(*fixture(w.fx, name));
    for (const auto& f : axiom_corpus("ms4")) CHECK(validates(b, f).valid);
  }
}

TEST_CASE("excluded middle fails on the six-element open algebra") {
  const auto& w = world();
  const auto f = I("p | ~p");
  const auto r = validates(w.o1, f);
  CHECK_FALSE(r.valid);
  REQUIRE(r.counter.has_value());
  CHECK(*r.counter == *oracle::first_counter(w.o1, f));
  CHECK(r.counter->at("p") == 1);
}

TEST_CASE("counter-valuations are the least in counter order") {
  const auto& w = world();
  std::mt19937_64 rng(31);
  int refuted = 0;
  for (int i = 0; i < 150; ++i) {
    const auto f = random_formula(Lang::Int, rng, 3, 3);
    const auto r = validates(w.o1, f);
    const auto c = oracle::first_counter(w.o1, f);
    CHECK(r.valid == !c.has_value());
    if (c) {
      CHECK(*r.counter == *c);
      ++refuted;
    }
    const auto g = random_formula(Lang::Mod, rng, 3, 2);
    const auto s = validates(w.b2, g);
    const auto d = oracle::first_counter(w.b2, g);
    CHECK(s.valid == !d.has_value());
    if (d) CHECK(*s.counter == *d);
  }
  CHECK(refuted > 10);
}

TEST_CASE("variable guard") {
  const auto& w = world();
  const auto f = I("p & q & r & s & t");
  CHECK_THROWS_AS(validates(w.o2, f), std::invalid_argument);
  CHECK_NOTHROW(validates(w.o2, f, 5));
}

TEST_CASE("validity is invariant under renaming") {
  const auto& w = world();
  std::mt19937_64 rng(12);
  for (int i = 0; i < 100; ++i) {
    const auto f = random_formula(Lang::Int, rng, 4, 2);
    const auto g = f.rename("p", "z").rename("q", "a");
    CHECK(validates(w.o1, f).valid == validates(w.o1, g).valid);
  }
}

TEST_CASE("translation agrees on axioms and random formulas") {
  const auto& w = world();
  for (const auto& f : axiom_corpus("mipc")) {
    CHECK(translation_equivalence(w.b1, f));
    CHECK(translation_equivalence(w.b2, f));
  }
  CHECK(translation_equivalence(w.b2, I("bot")));
  CHECK_FALSE(validates(w.o2, I("bot")).valid);
  std::mt19937_64 rng(1729);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_formula(Lang::Int, rng, 4, 3);
    CHECK(translation_equivalence(w.b1, f));
    CHECK(translation_equivalence(w.b2, f));
  }
  for (const auto& name : fixture_names()) {
    const auto b = complex_algebra(*fixture(w.fx, name));
    for (int i = 0; i < 20; ++i) CHECK(translation_equivalence(b, random_formula(Lang::Int, rng, 3, 2)));
  }
}

TEST_CASE("master-boxed disjunctions split on s.i. algebras") {
  const auto& w = world();
  CHECK(intersection_step(w.b2, M("p -> p"), M("q")));
  CHECK(validates(w.b2, M("p -> p")).valid);

  const auto grz = axiom_corpus("grz").front();
  CHECK(intersection_step(w.b2, grz, M("p | ~p")));
  CHECK(validates(w.b2, fresh_disjunction(Formula::master(grz), Formula::master(M("p | ~p"))), 8).valid);

  CHECK(intersection_step(w.b1, M("p"), M("q")));
  CHECK_FALSE(validates(w.b1, M("p")).valid);
  CHECK_FALSE(validates(w.b1, fresh_disjunction(Formula::master(M("p")), Formula::master(M("q"))), 8).valid);

  std::mt19937_64 rng(4);
  for (int i = 0; i < 40; ++i) {
    const auto g1 = random_formula(Lang::Mod, rng, 3, 2);
    const auto g2 = random_formula(Lang::Mod, rng, 3, 2);
    CHECK(intersection_step(w.b2, g1, g2));
  }
  const auto k5 = complex_algebra(w.fx.k5);
  CHECK_THROWS_AS(intersection_step(product(k5, k5), M("p"), M("q")), std::invalid_argument);
}

TEST_CASE("random formulas respect their bounds") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 200; ++i) {
    const auto f = random_formula(Lang::Int, rng, 4, 3);
    CHECK(f.depth() <= 4);
    for (const auto& v : f.variables()) CHECK((v == "p" || v == "q" || v == "r"));
  }
  std::mt19937_64 a(9), b(9);
  CHECK(random_formula(Lang::Mod, a, 4, 3) == random_formula(Lang::Mod, b, 4, 3));
  CHECK_THROWS_AS(random_formula(Lang::Int, rng, 2, 0), std::invalid_argument);
}
