#include <doctest.h>

#include "monadic/fixtures.hpp"
#include "monadic/io.hpp"
#include "monadic/verify.hpp"

using namespace monadic;

TEST_CASE("every end-to-end check passes") {
  const auto results = verify_paper(builtin_fixtures());
  REQUIRE(results.size() == verify_check_names().size());
  REQUIRE(results.size() == 17);
  for (std::size_t i = 0; i < results.size(); ++i) {
    CAPTURE(results[i].name);
    CAPTURE(results[i].detail);
    CHECK(results[i].passed);
    CHECK(results[i].name == verify_check_names()[i]);
    CHECK_FALSE(results[i].anchor.empty());
  }
}

TEST_CASE("filtering by name") {
  const auto results = verify_paper(builtin_fixtures(), {"key-lemma", false});
  REQUIRE(results.size() == 2);
  CHECK(results[0].name == "key-lemma-mipc");
  CHECK(results[1].name == "key-lemma-ms4");
  CHECK(verify_paper(builtin_fixtures(), {"no-such-check", false}).empty());
}

TEST_CASE("parallel runs report in declaration order with identical outcomes") {
  const auto fx = builtin_fixtures();
  const auto seq = verify_paper(fx);
  const auto par = verify_paper(fx, {"", true});
  REQUIRE(seq.size() == par.size());
  for (std::size_t i = 0; i < seq.size(); ++i) {
    CHECK(seq[i].name == par[i].name);
    CHECK(seq[i].passed == par[i].passed);
    CHECK(seq[i].detail == par[i].detail);
  }
}

TEST_CASE("a corrupted fixture fails validation first") {
  auto fx = builtin_fixtures();
  fx.k1 = build_ms4_frame({"u", "v", "w", "z"}, {{"u", "v"}, {"u", "w"}, {"v", "z"}, {"w", "z"}}, true,
                          {{"u", "z"}, {"v"}, {"w"}});
  const auto results = verify_paper(fx);
  REQUIRE_FALSE(results.empty());
  CHECK(results.front().name == "fixture-validation");
  CHECK_FALSE(results.front().passed);
  CHECK(results.front().detail.rfind("K1: ", 0) == 0);
}
