#include "doctest.h"

#include "gpc/errors.hpp"
#include "gpc/words.hpp"

#include "support.hpp"

using namespace gpc;
using test::canon;
using test::el;
using test::gamma1;

namespace {

  std::string reduced(std::string const& w) {
    auto const& g = *gamma1();
    return format_word(g, reduce(g, parse_word(g, w)));
  }

}  // namespace

TEST_CASE("word syntax") {
  auto const& g = *gamma1();
  CHECK(format_word(g, parse_word(g, "a c^-2 b")) == "a^1 c^-2 b^1");
  CHECK(format_word(g, parse_word(g, "")) == "e");
  CHECK(format_word(g, parse_word(g, "e")) == "e");
  CHECK(format_word(g, parse_word(g, "b^4")) == "b^1");
  CHECK(format_word(g, parse_word(g, "b^-1")) == "b^2");
  CHECK(format_word(g, parse_word(g, "a^2")) == "e");
  CHECK_THROWS_AS(parse_word(g, "a^0"), parse_error);
  CHECK_THROWS_AS(parse_word(g, "z"), parse_error);
  CHECK_THROWS_AS(parse_word(g, "a^"), parse_error);
  CHECK_THROWS_AS(parse_word(g, "a^x"), parse_error);
  try {
    parse_word(g, "a b^0");
    FAIL("expected parse_error");
  } catch (parse_error const& e) {
    CHECK(std::string(e.what()).find("b^0") != std::string::npos);
  }
}

TEST_CASE("reduce") {
  CHECK(reduced("a b a") == "b^1");
  CHECK(reduced("a c a") == "a^1 c^1 a^1");
  CHECK(reduced("b^2 b^2") == "b^1");
  CHECK(reduced("c c^-1") == "e");
  CHECK(reduced("c^3 b c^-3") == "b^1");
  CHECK(reduced("a d a") == "a^1 d^1 a^1");
}

TEST_CASE("canonical") {
  auto g = gamma1();
  CHECK(canon(g, "b a") == "a^1 b^1");
  CHECK(canon(g, "c a") == "c^1 a^1");
  CHECK(canon(g, "a b a") == "b^1");
  CHECK(canon(g, "c b") == "b^1 c^1");
  CHECK(canon(g, "d c b a") == "d^1 b^1 c^1 a^1");
}

TEST_CASE("multiply") {
  auto g = gamma1();
  CHECK((el(g, "a b") * el(g, "b^2")).to_string() == "a^1");
  CHECK((el(g, "a") * el(g, "a")).is_identity());
  CHECK((el(g, "c") * el(g, "d")).to_string() == "c^1 d^1");
}

TEST_CASE("invert") {
  auto g = gamma1();
  CHECK(invert(el(g, "a c")).to_string() == "c^-1 a^1");
  CHECK(invert(el(g, "b")).to_string() == "b^2");
  CHECK(invert(GroupElement::identity(g)).is_identity());
}

TEST_CASE("power") {
  auto g = gamma1();
  CHECK(power(el(g, "a c"), 2).to_string() == "a^1 c^1 a^1 c^1");
  CHECK(power(el(g, "b"), 3).is_identity());
  CHECK(power(el(g, "a b"), 2).to_string() == "b^2");
  CHECK(power(el(g, "a c"), 0).is_identity());
  CHECK(power(el(g, "a c"), -1) == invert(el(g, "a c")));
  CHECK(power(el(g, "c"), 1000000).to_string() == "c^1000000");
}

TEST_CASE("equal") {
  auto g = gamma1();
  CHECK(equal(el(g, "a b"), el(g, "b a")));
  CHECK_FALSE(equal(el(g, "a c"), el(g, "c a")));
  CHECK(equal(el(g, "a b a"), el(g, "b")));
  auto other = test::gamma2();
  CHECK_THROWS_AS(equal(el(g, "a"), GroupElement::identity(other)),
                  graph_mismatch);
  CHECK_THROWS_AS(multiply(el(g, "a"), GroupElement::identity(other)),
                  graph_mismatch);
}

TEST_CASE("project") {
  auto        g = gamma1();
  auto const& G = *g;
  CHECK(project(el(g, "a c d"), vertex_set(G, {"a", "d"})).to_string()
        == "a^1 d^1");
  CHECK(project(el(g, "a c d"), vertex_set(G, {"c"})).to_string() == "c^1");
  auto A  = vertex_set(G, {"a"});
  auto x  = el(g, "a b");
  auto y  = el(g, "b^2");
  auto lhs = project(x * y, A);
  CHECK(lhs.to_string() == "a^1");
  CHECK(lhs == project(x, A) * project(y, A));
  // deleting c lets the two a syllables meet
  CHECK(project(el(g, "a c a"), vertex_set(G, {"a", "b"})).is_identity());
  CHECK_THROWS_AS(project(x, {9}), precondition_error);
}

TEST_CASE("generator orders") {
  auto g = gamma1();
  for (VertexId v = 0; v < g->size(); ++v) {
    auto x = GroupElement::generator(g, v);
    auto const& c = g->color(v);
    if (c.is_finite()) {
      auto q = static_cast<std::int64_t>(c.order());
      CHECK(power(x, q).is_identity());
      for (std::int64_t l = 1; l < q; ++l) {
        CHECK_FALSE(power(x, l).is_identity());
      }
    } else {
      for (std::int64_t l = -20; l <= 20; ++l) {
        CHECK(power(x, l).is_identity() == (l == 0));
      }
    }
  }
}

TEST_CASE("infinite exponents overflow loudly") {
  auto g = gamma1();
  auto big = el(g, "c^9223372036854775807");
  CHECK_THROWS_AS(big * el(g, "c"), std::overflow_error);
  CHECK_THROWS_AS(power(el(g, "c^3"), INT64_MAX / 2), std::overflow_error);
  CHECK((big * el(g, "c^-1")).to_string() == "c^9223372036854775806");
}

TEST_CASE("large finite orders") {
  auto g = test::graph_from("vertex x color 4611686018427387904\n");
  auto x = el(g, "x^4611686018427387903");
  CHECK((x * x).to_string() == "x^4611686018427387902");
  CHECK((x * el(g, "x")).is_identity());
}

TEST_CASE("movable occurrences") {
  auto const& G = *gamma1();
  auto w = parse_word(G, "a c b");
  CHECK(front_movable(G, w) == std::vector<bool>{true, false, true});
  CHECK(last_movable(G, w) == std::vector<bool>{false, true, true});
}

TEST_CASE("canonical output is lexicographically least under single swaps") {
  auto        g = gamma1();
  auto const& G = *g;
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    auto w  = test::random_word(G, rng, 6);
    auto cw = canonical_word(G, w);
    CHECK(canonical_word(G, cw) == cw);
    CHECK(reduce(G, reduce(G, w)) == reduce(G, w));
    for (std::size_t k = 0; k + 1 < cw.size(); ++k) {
      if (G.adjacent(cw[k].generator, cw[k + 1].generator)) {
        CHECK(cw[k].generator < cw[k + 1].generator);
      }
    }
  }
}
