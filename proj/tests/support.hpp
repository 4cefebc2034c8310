#ifndef GPC_TESTS_SUPPORT_HPP_
#define GPC_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "gpc/presentation.hpp"
#include "gpc/words.hpp"

namespace gpc::test {

  inline GraphPtr graph_from(std::string const& text) {
    return std::make_shared<ColoredGraph const>(parse_graph(text));
  }

  // a, b, c, d with colours 2, 3, inf, 2; edges {a,b}, {b,c}
  inline GraphPtr gamma1() {
    static GraphPtr g = graph_from("vertex a color 2\n"
                                   "vertex b color 3\n"
                                   "vertex c color inf\n"
                                   "vertex d color 2\n"
                                   "edge a b\n"
                                   "edge b c\n");
    return g;
  }

  // four colour 2 vertices, no edges
  inline GraphPtr gamma2() {
    static GraphPtr g = graph_from("vertex a1 color 2\n"
                                   "vertex a2 color 2\n"
                                   "vertex b1 color 2\n"
                                   "vertex b2 color 2\n");
    return g;
  }

  // a, b1..b4 all colour 2, no edges
  inline GraphPtr gamma3() {
    static GraphPtr g = graph_from("vertex a color 2\n"
                                   "vertex b1 color 2\n"
                                   "vertex b2 color 2\n"
                                   "vertex b3 color 2\n"
                                   "vertex b4 color 2\n");
    return g;
  }

  inline GroupElement el(GraphPtr const& g, std::string const& w) {
    return GroupElement::parse(g, w);
  }

  inline std::string canon(GraphPtr const& g, std::string const& w) {
    return el(g, w).to_string();
  }

  // Random word with `len` syllables; consecutive generators may repeat.
  inline Word random_word(ColoredGraph const& g, std::mt19937_64& rng,
                          std::size_t len, std::int64_t inf_bound = 3) {
    Word w;
    if (g.size() == 0) {
      return w;
    }
    std::uniform_int_distribution<VertexId> pick(
        0, static_cast<VertexId>(g.size() - 1));
    for (std::size_t i = 0; i < len; ++i) {
      VertexId     v = pick(rng);
      auto const&  c = g.color(v);
      std::int64_t e = 0;
      if (c.is_finite()) {
        e = std::uniform_int_distribution<std::int64_t>(
            1, static_cast<std::int64_t>(c.order()) - 1)(rng);
      } else {
        e = std::uniform_int_distribution<std::int64_t>(-inf_bound,
                                                        inf_bound - 1)(rng);
        if (e >= 0) {
          ++e;
        }
      }
      w.push_back({v, e});
    }
    return w;
  }

  inline VertexSet random_subset(ColoredGraph const& g, std::mt19937_64& rng) {
    VertexSet A;
    for (VertexId v = 0; v < g.size(); ++v) {
      if (rng() & 1u) {
        A.insert(v);
      }
    }
    return A;
  }

}  // namespace gpc::test

#endif  // GPC_TESTS_SUPPORT_HPP_
