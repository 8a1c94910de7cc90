#include <doctest.h>

#include <random>

#include "../oracles.hpp"
#include "monadic/duality.hpp"
#include "monadic/fixtures.hpp"
#include "monadic/io.hpp"

using namespace monadic;

TEST_CASE("complex algebra sizes") {
  const auto fx = builtin_fixtures();
  CHECK(complex_algebra(fx.k2).n == 8);
  const auto two = complex_algebra(fx.k5);
  CHECK(two.n == 2);
  CHECK(two.box == std::vector<Elem>{0, 1});
  CHECK(two.forall == std::vector<Elem>{0, 1});
  CHECK(two.neg == std::vector<Elem>{1, 0});
  CHECK(complex_algebra(skeleton(fx.k1).frame).n == 6);
}

TEST_CASE("MIPC carriers are the R-upsets") {
  const auto fx = builtin_fixtures();
  for (const auto& name : fixture_names()) {
    const auto sk = skeleton(*fixture(fx, name)).frame;
    CHECK(oracle::library_sets(r_upsets(sk)) ==
          oracle::as_set(oracle::closed_subsets(oracle::matrix(sk.r))));
    CHECK(complex_algebra(sk).n == r_upsets(sk).size());
  }
}

TEST_CASE("complex algebra operations are the set operations") {
  const auto k1 = builtin_fixtures().k1;
  const auto b = complex_algebra(k1);
  const auto r = oracle::matrix(k1.r);
  const auto q = oracle::q_matrix(k1);
  const auto e = oracle::matrix(k1.e);
  for (Elem s = 0; s < b.n; ++s) {
    Elem box = 0, all = 0;
    for (std::size_t x = 0; x < 4; ++x) {
      bool in_box = true, in_all = true;
      for (std::size_t y = 0; y < 4; ++y) {
        if (r[x][y] && !((s >> y) & 1U)) in_box = false;
        if (e[x][y] && !((s >> y) & 1U)) in_all = false;
      }
      if (in_box) box |= 1U << x;
      if (in_all) all |= 1U << x;
    }
    CHECK(b.box[s] == box);
    CHECK(b.forall[s] == all);
    CHECK(b.neg[s] == (15U & ~s));
  }
  (void)q;
}

TEST_CASE("invalid frames have no complex algebra") {
  const auto f = build_ms4_frame({"x", "y", "z"}, {{"y", "z"}}, true, {{"x", "y"}, {"z"}});
  CHECK_THROWS_AS(complex_algebra(f), std::invalid_argument);
}

TEST_CASE("dual frames") {
  const auto fx = builtin_fixtures();
  CHECK(frames_isomorphic(dual_frame(complex_algebra(fx.k2)), fx.k2).has_value());
  CHECK(dual_frame(complex_algebra(fx.k5)).size() == 1);
  const auto sk = skeleton(fx.k1).frame;
  CHECK(frames_isomorphic(dual_frame(complex_algebra(sk)), sk).has_value());
  CHECK(oracle::isomorphic(dual_frame(complex_algebra(sk)), sk));
}

TEST_CASE("round trips on random frames") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 60; ++i) {
    const auto g = random_ms4_frame(rng, 5);
    const auto b = complex_algebra(g);
    CHECK(frames_isomorphic(dual_frame(b), g).has_value());
    const auto rep = representation(b);
    CHECK(check_homomorphism(b, complex_algebra(dual_frame(b)), rep).ok());
    const auto sk = skeleton(g).frame;
    const auto h = complex_algebra(sk);
    CHECK(frames_isomorphic(dual_frame(h), sk).has_value());
    CHECK(check_homomorphism(h, complex_algebra(dual_frame(h)), representation(h)).ok());
    const auto o = open_algebra(b).algebra;
    CHECK(check_homomorphism(o, complex_algebra(dual_frame(o)), representation(o)).ok());
  }
}

TEST_CASE("naturality of the skeleton") {
  const auto fx = builtin_fixtures();
  for (const auto& name : fixture_names()) {
    const auto r = check_skeleton_naturality(*fixture(fx, name));
    CAPTURE(name);
    CHECK(r.ok);
    CHECK(r.failing_operation.empty());
  }
  std::mt19937_64 rng(8);
  for (int i = 0; i < 40; ++i) CHECK(check_skeleton_naturality(random_ms4_frame(rng, 5)).ok);
}

TEST_CASE("inverse images are homomorphisms") {
  const auto fx = builtin_fixtures();
  const std::vector<std::size_t> f{0, 1, 2, 2};
  const auto map = inverse_image_map(fx.h1, fx.h2, f);
  CHECK(check_homomorphism(complex_algebra(fx.h2), complex_algebra(fx.h1), map).ok());
  // Onto frame maps give injective inverse images.
  std::set<Elem> distinct(map.begin(), map.end());
  CHECK(distinct.size() == map.size());

  const auto s1 = skeleton(fx.k1).frame;
  const auto s2 = skeleton(fx.k2).frame;
  const auto m = inverse_image_map(s1, s2, {0, 1, 2, 2});
  CHECK(check_homomorphism(complex_algebra(s2), complex_algebra(s1), m).ok());
}
