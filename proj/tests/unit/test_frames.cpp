#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "monadic/fixtures.hpp"
#include "monadic/frames.hpp"
#include "monadic/io.hpp"

using namespace monadic;

namespace {

PointSet set_of(const Ms4Frame& f, std::initializer_list<const char*> names) {
  PointSet s = 0;
  for (const char* n : names) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f.points[i] == n) s |= singleton(i);
    }
  }
  return s;
}

}  // namespace

TEST_CASE("built-in frames are valid and so are their skeletons") {
  const auto fx = builtin_fixtures();
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    const auto g = *fixture(fx, name);
    CHECK(validate_frame(g).ok());
    CHECK(validate_frame(skeleton(g).frame).ok());
  }
  CHECK_FALSE(fixture("K6").has_value());
}

TEST_CASE("commutation failure reports the triple") {
  // E-classes {x,y},{z}; R is reflexive plus y R z.
  const auto f = build_ms4_frame({"x", "y", "z"}, {{"y", "z"}}, true, {{"x", "y"}, {"z"}});
  const auto r = validate_frame(f);
  REQUIRE(r.violations.size() == 1);
  CHECK(r.violations[0].condition == cond::kCommutation);
  CHECK(r.violations[0].witness == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("relation axioms are reported by name") {
  Ms4Frame f{{"x", "y"}, Relation(2), Relation::identity(2)};
  f.r.set(0, 1);
  auto r = validate_frame(f);
  CHECK(r.has(cond::kRReflexive));

  f.r = Relation::identity(2);
  f.e.set(0, 1);
  r = validate_frame(f);
  CHECK(r.has(cond::kESymmetric));

  MipcFrame g{{"x", "y"}, Relation::identity(2), Relation::identity(2)};
  g.r.set(0, 1);
  g.r.set(1, 0);
  g.q.set(0, 1);
  g.q.set(1, 0);
  r = validate_frame(g);
  CHECK(r.has(cond::kRAntisymmetric));

  MipcFrame h{{"x", "y"}, Relation::identity(2), Relation::identity(2)};
  h.r.set(0, 1);
  r = validate_frame(h);
  CHECK(r.has(cond::kRInQ));

  Ms4Frame bad{{"x"}, Relation(2), Relation(1)};
  CHECK_THROWS_AS(validate_frame(bad), std::invalid_argument);
}

TEST_CASE("Q is E after R") {
  const auto fx = builtin_fixtures();
  const auto q = q_relation(fx.k1);
  CHECK(q.successors(2) == set_of(fx.k1, {"v", "w", "z"}));
  for (const auto& name : fixture_names()) {
    const auto g = *fixture(fx, name);
    CHECK(oracle::matrix(q_relation(g)) == oracle::q_matrix(g));
  }
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const auto g = random_ms4_frame(rng, 6);
    CHECK(oracle::matrix(q_relation(g)) == oracle::q_matrix(g));
  }
}

TEST_CASE("identity E gives Q = R") {
  const auto k4 = builtin_fixtures().k4;
  const auto d = derived_relations(k4);
  CHECK(d.q == k4.r);
  CHECK(d.e_q == d.e_r);
}

TEST_CASE("E_Q classes of the K2 skeleton") {
  const auto sk = skeleton(builtin_fixtures().k2).frame;
  const auto eq = derived_relations(sk).e_q;
  CHECK(eq.successors(0) == singleton(0));
  CHECK(eq.successors(1) == (singleton(1) | singleton(2)));
  CHECK(eq.successors(2) == (singleton(1) | singleton(2)));
}

TEST_CASE("skeletons") {
  const auto fx = builtin_fixtures();
  SUBCASE("partial orders keep every point") {
    const auto sk = skeleton(fx.k1);
    CHECK(sk.frame.points == fx.k1.points);
    CHECK(sk.frame.r == fx.k1.r);
    CHECK(sk.frame.q == q_relation(fx.k1));
  }
  SUBCASE("H1 collapses b and d") {
    const auto sk = skeleton(fx.h1);
    CHECK(sk.frame.points == std::vector<std::string>{"a", "b=d", "c"});
    CHECK(sk.projection == std::vector<std::size_t>{0, 1, 2, 1});
    const auto eq = derived_relations(sk.frame).e_q;
    CHECK(eq.holds(0, 1));
    CHECK_FALSE(eq.holds(0, 2));
    CHECK_FALSE(eq.holds(1, 2));
  }
  SUBCASE("H2 is a two-point chain in one E_Q class") {
    const auto sk = skeleton(fx.h2).frame;
    MipcFrame chain{{"0", "1"}, Relation::identity(2), Relation(2)};
    chain.r.set(0, 1);
    for (std::size_t x = 0; x < 2; ++x) {
      for (std::size_t y = 0; y < 2; ++y) chain.q.set(x, y);
    }
    CHECK(frames_isomorphic(sk, chain).has_value());
  }
  SUBCASE("discrete E and partial R") {
    const auto sk = skeleton(fx.k4).frame;
    CHECK(sk.q == sk.r);
  }
}

TEST_CASE("Q-upsets agree with subset enumeration") {
  const auto fx = builtin_fixtures();
  const auto k1 = q_upsets(fx.k1);
  const std::vector<PointSet> expected{0, set_of(fx.k1, {"v", "z"}), set_of(fx.k1, {"v", "w", "z"}),
                                       full_set(4)};
  CHECK(k1 == expected);
  CHECK(q_upsets(fx.k2) == std::vector<PointSet>{0, set_of(fx.k2, {"b", "c"}), full_set(3)});
  CHECK(q_upsets(fx.k5) == std::vector<PointSet>{0, 1});

  for (const auto& name : fixture_names()) {
    const auto g = *fixture(fx, name);
    CHECK(oracle::library_sets(q_upsets(g)) ==
          oracle::as_set(oracle::closed_subsets(oracle::q_matrix(g))));
    const auto sk = skeleton(g).frame;
    CHECK(oracle::library_sets(q_upsets(sk)) ==
          oracle::as_set(oracle::closed_subsets(oracle::matrix(sk.q))));
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const auto g = random_ms4_frame(rng, 7);
    CHECK(oracle::library_sets(q_upsets(g)) ==
          oracle::as_set(oracle::closed_subsets(oracle::q_matrix(g))));
  }
}

TEST_CASE("restriction to Q-upsets") {
  const auto fx = builtin_fixtures();
  const auto sub = restrict_to(fx.k1, set_of(fx.k1, {"v", "w", "z"}));
  CHECK(sub.points == std::vector<std::string>{"v", "w", "z"});
  CHECK(validate_frame(sub).ok());

  const auto whole = restrict_to(fx.k1, full_set(4));
  CHECK(whole.r == fx.k1.r);
  CHECK(whole.e == fx.k1.e);

  const auto bc = restrict_to(fx.k2, set_of(fx.k2, {"b", "c"}));
  CHECK(frames_isomorphic(bc, fx.k3).has_value());
  CHECK(oracle::isomorphic(bc, fx.k3));

  CHECK_THROWS_AS(restrict_to(fx.k1, set_of(fx.k1, {"w"})), std::invalid_argument);
}

TEST_CASE("frame isomorphism agrees with permutation search") {
  const auto fx = builtin_fixtures();
  CHECK_FALSE(frames_isomorphic(fx.k3, fx.k4).has_value());
  CHECK(frames_isomorphic(fx.k2, fx.k2) == std::vector<std::size_t>{0, 1, 2});

  // A relabelled copy of K2.
  const auto k2r = build_ms4_frame({"c", "a", "b"}, {{"a", "b"}, {"b", "c"}}, true, {{"b", "c"}, {"a"}});
  const auto iso = frames_isomorphic(fx.k2, k2r);
  REQUIRE(iso.has_value());
  CHECK(*iso == std::vector<std::size_t>{1, 2, 0});

  std::mt19937_64 rng(5);
  std::vector<Ms4Frame> frames;
  for (int i = 0; i < 30; ++i) frames.push_back(random_ms4_frame(rng, 4));
  for (const auto& a : frames) {
    for (const auto& b : frames) {
      CHECK(frames_isomorphic(a, b).has_value() == oracle::isomorphic(a, b));
    }
  }
}

TEST_CASE("Q-roots") {
  const auto fx = builtin_fixtures();
  CHECK(q_root(fx.k1) == std::optional<std::size_t>{0});
  CHECK(q_root(fx.k2) == std::optional<std::size_t>{0});
  CHECK(q_root(fx.k5).has_value());
  const auto two = build_ms4_frame({"x", "y"}, {}, true, {});
  CHECK_FALSE(q_root(two).has_value());
  CHECK(q_root(skeleton(fx.h1).frame).has_value());
}

TEST_CASE("random frames are valid and bounded") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 200; ++i) {
    const auto g = random_ms4_frame(rng, 5);
    CHECK(g.size() >= 1);
    CHECK(g.size() <= 5);
    CHECK(validate_frame(g).ok());
  }
}

TEST_CASE("set formatting") {
  const auto k1 = builtin_fixtures().k1;
  CHECK(format_set(k1.points, set_of(k1, {"v", "z"})) == "{v,z}");
  CHECK(format_set(k1.points, 0) == "{}");
}

TEST_CASE("Q-image condition agrees with a check over every R-upset") {
  std::mt19937_64 rng(17);
  int failing = 0;
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng() % 5;
    MipcFrame f{std::vector<std::string>(n, "x"), Relation(n), Relation(n)};
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x; y < n; ++y) {
        if (x == y || rng() % 3 == 0) f.r.set(x, y);
      }
    }
    f.r = f.r.reflexive_transitive_closure();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (rng() % 4 == 0) f.q.set(x, y);
      }
    }
    f.q = f.q.reflexive_transitive_closure();
    const auto r = oracle::matrix(f.r);
    const auto q = oracle::matrix(f.q);
    bool holds = true;
    for (const auto& u : oracle::closed_subsets(r)) {
      std::vector<bool> image(n, false);
      for (auto x : u) {
        for (std::size_t y = 0; y < n; ++y) image[y] = image[y] || q[x][y];
      }
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          if (image[y] && r[y][z] && !image[z]) holds = false;
        }
      }
    }
    CHECK(holds == !validate_frame(f).has(cond::kQImageOfUpset));
    failing += holds ? 0 : 1;
  }
  CHECK(failing > 20);
}
