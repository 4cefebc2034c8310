#include "doctest.h"

#include <numeric>
#include <tuple>

#include "gpc/autwitness.hpp"
#include "gpc/errors.hpp"

using namespace gpc::aut;

namespace {

  Permutation cycle_power(std::uint32_t n, std::uint32_t shift) {
    Permutation p(n);
    for (std::uint32_t i = 0; i < n; ++i) {
      p[i] = (i + shift) % n;
    }
    return p;
  }

  // Element orders of Z_q^k counted by brute force over integer tuples.
  std::map<std::uint64_t, std::uint64_t> tuple_profile(std::uint64_t q,
                                                       unsigned      k) {
    std::map<std::uint64_t, std::uint64_t> out;
    std::vector<std::uint64_t>             t(k, 0);
    while (true) {
      std::uint64_t ord = 1;
      for (auto x : t) {
        std::uint64_t m = 1;
        while ((x * m) % q != 0) {
          ++m;
        }
        ord = std::lcm(ord, m);
      }
      ++out[ord];
      unsigned i = 0;
      while (i < k && ++t[i] == q) {
        t[i++] = 0;
      }
      if (i == k) {
        break;
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("witness structures") {
  auto s = build_witness_structure(2, 1, 2);
  CHECK(s.size() == 4);
  CHECK(s.edges().size() == 4);
  CHECK(s.mark(0) == 0);
  CHECK(s.mark(3) == 1);
  auto t = build_witness_structure(3, 1, 1);
  CHECK(t.size() == 3);
  CHECK(t.has_edge(0, 1));
  CHECK(t.has_edge(2, 0));
  CHECK_FALSE(t.has_edge(1, 0));
  CHECK_THROWS_AS(build_witness_structure(4, 1, 1), gpc::precondition_error);
  CHECK_THROWS_AS(build_witness_structure(2, 6, 2), gpc::guard_error);
  CHECK_THROWS_AS(build_witness_structure(2, 1, 0), gpc::precondition_error);
}

TEST_CASE("automorphism groups by enumeration") {
  auto c3 = automorphism_group(build_witness_structure(3, 1, 1));
  CHECK(c3.order() == 3);
  CHECK(c3.order_profile() == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {3, 2}});

  auto two = automorphism_group(build_witness_structure(2, 1, 2));
  CHECK(two.order() == 4);
  CHECK(two.order_profile() == std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 3}});

  MarkedDigraph path(2, {{0, 1}}, {0, 0});
  CHECK(automorphism_group(path).order() == 1);

  // copies swap once marks are gone
  auto control = automorphism_group(build_witness_structure(2, 1, 2).unmarked());
  CHECK(control.order() == 8);
  CHECK_FALSE(control.is_abelian());
}

TEST_CASE("marked digraphs reject edges across marks") {
  CHECK_THROWS_AS(MarkedDigraph(2, {{0, 1}}, {0, 1}), gpc::precondition_error);
  CHECK_THROWS(MarkedDigraph(2, {{0, 2}}, {0, 0}));
}

TEST_CASE("group tables") {
  auto z4 = GroupTable::generated_by(4, {cycle_power(4, 1)});
  CHECK(z4.order() == 4);
  CHECK(z4.is_abelian());
  CHECK(GroupTable::element_order(cycle_power(4, 2)) == 2);
  CHECK_THROWS(GroupTable({cycle_power(4, 1)}));
  CHECK(compose(cycle_power(4, 1), cycle_power(4, 1)) == cycle_power(4, 2));
}

TEST_CASE("comparison with homocyclic groups") {
  Permutation a{1, 0, 2, 3}, b{0, 1, 3, 2};
  auto klein = GroupTable::generated_by(4, {a, b});
  CHECK(verify_iso_to_direct_sum(klein, 2, 1, 2));

  auto z3 = GroupTable::generated_by(3, {cycle_power(3, 1)});
  CHECK_FALSE(verify_iso_to_direct_sum(z3, 2, 1, 1));

  auto z4 = GroupTable::generated_by(4, {cycle_power(4, 1)});
  CHECK_FALSE(verify_iso_to_direct_sum(z4, 2, 1, 2));
  CHECK(verify_iso_to_direct_sum(z4, 2, 2, 1));
}

TEST_CASE("reference profiles agree with tuple counting") {
  for (auto [p, n, k] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {2u, 2u, 2u},
                         {5u, 1u, 2u}, {2u, 3u, 2u}, {3u, 2u, 1u}}) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
      q *= p;
    }
    CHECK(homocyclic_order_profile(p, n, k) == tuple_profile(q, k));
  }
}

TEST_CASE("witnesses within the guard") {
  for (auto [p, n, k] : {std::tuple{2u, 1u, 2u}, {2u, 1u, 3u}, {3u, 1u, 2u},
                         {2u, 2u, 2u}, {5u, 1u, 1u}, {2u, 3u, 1u},
                         {7u, 1u, 2u}}) {
    auto t = automorphism_group(build_witness_structure(p, n, k));
    std::uint64_t expected = 1;
    for (unsigned i = 0; i < n * k; ++i) {
      expected *= p;
    }
    CHECK(t.order() == expected);
    CHECK(verify_iso_to_direct_sum(t, p, n, k));
  }
}
