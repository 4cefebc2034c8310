#include "doctest.h"

#include "gpc/errors.hpp"
#include "gpc/oracle.hpp"
#include "gpc/structure.hpp"

#include "support.hpp"

using namespace gpc;
using test::el;
using test::gamma1;

namespace {

  std::string syllables(std::set<Syllable> const& xs) {
    std::string out;
    for (auto const& s : xs) {
      out += (out.empty() ? "" : " ") + format_syllable(*gamma1(), s);
    }
    return out;
  }

  Word respell(BarkDecomp const& d) {
    auto const& G  = d.w1.graph();
    auto        w1 = d.w1.word();
    auto        wi = inverse_word(G, w1);
    return concat({&w1, &d.w2.word(), &d.w3.word(), &d.w2prime.word(), &wi});
  }

  BarkDecomp claim(std::string const& w1, std::string const& w2,
                   std::string const& w3, std::string const& w2p) {
    auto g = gamma1();
    return {el(g, w1), el(g, w2), el(g, w3), el(g, w2p)};
  }

}  // namespace

TEST_CASE("support") {
  auto g = gamma1();
  CHECK(format_vertex_set(*g, support(el(g, "a c a"))) == "{a, c}");
  CHECK(support(GroupElement::identity(g)).empty());
  CHECK(format_vertex_set(*g, support(el(g, "b a"))) == "{a, b}");
}

TEST_CASE("ends") {
  auto g = gamma1();
  auto e = ends(el(g, "a b"));
  CHECK(syllables(e.first) == "a^1 b^1");
  CHECK(syllables(e.last) == "a^1 b^1");
  CHECK(syllables(e.last_inverse) == "a^1 b^2");

  e = ends(el(g, "a c"));
  CHECK(syllables(e.first) == "a^1");
  CHECK(syllables(e.last) == "c^1");
  CHECK(syllables(e.last_inverse) == "c^-1");

  e = ends(el(g, "c^2"));
  CHECK(syllables(e.first) == "c^2");
  CHECK(syllables(e.last) == "c^2");
  CHECK(syllables(e.last_inverse) == "c^-2");

  CHECK_THROWS_AS(ends(GroupElement::identity(g)), precondition_error);
}

TEST_CASE("cyclic normality") {
  auto g = gamma1();
  CHECK_FALSE(is_cyclically_normal(el(g, "a c a")));
  CHECK(is_cyclically_normal(el(g, "c")));
  CHECK(is_cyclically_normal(el(g, "a c")));
  CHECK(is_cyclically_normal(el(g, "a c^2")));
  CHECK_FALSE(is_cyclically_normal(el(g, "c a c")));
  // the merged b is one occurrence, both first and last
  CHECK(is_cyclically_normal(el(g, "b a c b")));
  CHECK_THROWS_AS(is_cyclically_normal(GroupElement::identity(g)),
                  precondition_error);
}

TEST_CASE("decomposition of a c a") {
  auto g = gamma1();
  auto x = el(g, "a c a");
  auto d = barkauskas_decompose(x);
  CHECK(d.w1.to_string() == "a^1");
  CHECK(d.w2.is_identity());
  CHECK(d.w3.to_string() == "c^1");
  CHECK(d.w2prime.is_identity());
  CHECK(verify_decomposition(x, d).ok());
  CHECK(oracle::oracle_equal(*g, respell(d), x.word()));
}

TEST_CASE("decomposition of c a c") {
  auto g = gamma1();
  auto x = el(g, "c a c");
  auto d = barkauskas_decompose(x);
  CHECK(d.w1.is_identity());
  CHECK(d.w2.to_string() == "c^1");
  CHECK(d.w3.to_string() == "a^1");
  CHECK(d.w2prime.to_string() == "c^1");
  auto check = verify_decomposition(x, d);
  CHECK(check.ok());
  CHECK(oracle::oracle_equal(*g, respell(d), x.word()));
  // w3 w2' w2 = a c^2
  auto tail = d.w3 * d.w2prime * d.w2;
  CHECK(tail.to_string() == "a^1 c^2");
  CHECK(is_cyclically_normal(tail));
}

TEST_CASE("decomposition of a cyclically normal element") {
  auto g = gamma1();
  auto x = el(g, "a b");
  auto d = barkauskas_decompose(x);
  CHECK(d.w1.is_identity());
  CHECK(d.w2.is_identity());
  CHECK(d.w2prime.is_identity());
  CHECK(d.w3.to_string() == "a^1 b^1");
  auto e = barkauskas_decompose(GroupElement::identity(g));
  CHECK(e.w1.is_identity());
  CHECK(e.w3.is_identity());
  CHECK(verify_decomposition(GroupElement::identity(g), e).ok());
}

TEST_CASE("verify_decomposition rejects bad claims") {
  auto x = el(gamma1(), "a c a");
  auto c2 = verify_decomposition(x, claim("", "", "a c a", ""));
  CHECK_FALSE(c2.ok());
  CHECK(c2.conditions[0].passed);
  CHECK_FALSE(c2.conditions[1].passed);

  auto c1 = verify_decomposition(x, claim("a", "", "d", ""));
  CHECK_FALSE(c1.ok());
  CHECK_FALSE(c1.conditions[0].passed);

  // sp(w2) != sp(w2')
  auto y  = el(gamma1(), "c a b");
  auto c3 = verify_decomposition(y, claim("", "c", "a", "b"));
  CHECK_FALSE(c3.conditions[2].passed);
}

TEST_CASE("valid primes") {
  auto const& G = *gamma1();
  CHECK(least_valid_prime(G) == 5);
  CHECK_NOTHROW(require_valid_prime(G, 7));
  CHECK_THROWS_AS(require_valid_prime(G, 3), precondition_error);
  CHECK_THROWS_AS(require_valid_prime(G, 9), precondition_error);
  auto raag = test::graph_from("vertex x color inf\n");
  CHECK(least_valid_prime(*raag) == 2);
}

TEST_CASE("power via decomposition, p = 5") {
  auto g = gamma1();

  auto ac = power_via_decomposition(el(g, "a c"), 5);
  CHECK(ac.which == PowerCase::repetition);
  CHECK(ac.value.length() == 10);
  CHECK(ac.value.to_string()
        == "a^1 c^1 a^1 c^1 a^1 c^1 a^1 c^1 a^1 c^1");

  auto ab = power_via_decomposition(el(g, "a b"), 5);
  CHECK(ab.which == PowerCase::clique);
  CHECK(ab.value.to_string() == "a^1 b^2");

  auto cac = power_via_decomposition(el(g, "c a c"), 5);
  CHECK(cac.which == PowerCase::conjugated);
  auto five = el(g, "c a c");
  auto prod = five * five * five * five * five;
  CHECK(cac.value == prod);
  CHECK(cac.value.to_string()
        == "c^1 a^1 c^2 a^1 c^2 a^1 c^2 a^1 c^2 a^1 c^1");

  CHECK(power_via_decomposition(el(g, "c^3"), 5).which
        == PowerCase::single_syllable);
  CHECK(power_via_decomposition(GroupElement::identity(g), 5).which
        == PowerCase::identity);
  CHECK_THROWS_AS(power_via_decomposition(el(g, "a"), 3), precondition_error);
}

TEST_CASE("power-support law examples") {
  auto g = gamma1();
  CHECK(power_support_check(el(g, "a c"), 5));
  CHECK(power_support_check(GroupElement::identity(g), 5));
  CHECK(power_support_check(el(g, "c a c"), 5));
  CHECK_THROWS_AS(power_support_check(el(g, "a"), 4), precondition_error);
}

TEST_CASE("shuffle-equivalent inputs give the same structural answers") {
  auto        g = gamma1();
  auto const& G = *g;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto w = test::random_word(G, rng, 5);
    auto x = GroupElement(g, w);
    if (x.is_identity()) {
      continue;
    }
    auto sp = support(x);
    for (auto const& member : oracle::shuffle_closure(G, reduce(G, w))) {
      auto y = GroupElement(g, member);
      VertexSet raw;
      for (auto const& s : member) {
        raw.insert(s.generator);
      }
      CHECK(raw == sp);
      CHECK(is_cyclically_normal(y) == is_cyclically_normal(x));
    }
  }
}
