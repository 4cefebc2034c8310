#include "gpc/structure.hpp"

#include <algorithm>
#include <optional>

#include "gpc/arith.hpp"
#include "gpc/errors.hpp"

namespace gpc {

  VertexSet support(GroupElement const& g) {
    VertexSet out;
    for (auto const& s : g.word()) {
      out.insert(s.generator);
    }
    return out;
  }

  EndsData ends(GroupElement const& g) {
    if (g.is_identity()) {
      throw precondition_error("the identity has no first or last syllables");
    }
    auto const& G     = g.graph();
    auto const& w     = g.word();
    auto        front = front_movable(G, w);
    auto        back  = last_movable(G, w);
    EndsData    out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (front[i]) {
        out.first.insert(w[i]);
      }
      if (back[i]) {
        out.last.insert(w[i]);
        out.last_inverse.insert(inverse(G, w[i]));
      }
    }
    return out;
  }

  bool is_cyclically_normal(GroupElement const& g) {
    if (g.is_identity()) {
      throw precondition_error("the identity is not a cyclically normal form");
    }
    auto const& w = g.word();
    if (w.size() == 1) {
      return true;
    }
    auto front = front_movable(g.graph(), w);
    auto back  = last_movable(g.graph(), w);
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!front[i]) {
        continue;
      }
      for (std::size_t j = 0; j < w.size(); ++j) {
        if (j != i && back[j] && w[j].generator == w[i].generator) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Decomposition
  ////////////////////////////////////////////////////////////////////////

  namespace {

    struct EndPair {
      std::size_t first;
      std::size_t last;
    };

    bool cancels(ColoredGraph const& G, Syllable x, Syllable y) {
      auto const& c = G.color(x.generator);
      if (c.is_infinite()) {
        return x.exponent == -y.exponent;
      }
      return (static_cast<std::uint64_t>(x.exponent)
              + static_cast<std::uint64_t>(y.exponent))
                 % c.order()
             == 0;
    }

    // Least generator (in vertex order) that has a front-movable occurrence
    // and a distinct last-movable occurrence, whose exponents cancel or not
    // as requested, and which is adjacent to every vertex of `clique`.
    std::optional<EndPair> find_end_pair(ColoredGraph const& G, Word const& h,
                                         bool             want_cancel,
                                         VertexSet const& clique) {
      auto front = front_movable(G, h);
      auto back  = last_movable(G, h);
      std::optional<EndPair> best;
      for (std::size_t i = 0; i < h.size(); ++i) {
        if (!front[i]) {
          continue;
        }
        auto const a = h[i].generator;
        if (best && h[best->first].generator < a) {
          continue;
        }
        std::size_t j = h.size();
        for (std::size_t k = h.size(); k-- > i + 1;) {
          if (h[k].generator == a) {
            j = k;
            break;
          }
        }
        if (j == h.size() || !back[j]) {
          continue;
        }
        if (cancels(G, h[i], h[j]) != want_cancel) {
          continue;
        }
        if (std::any_of(clique.begin(), clique.end(), [&](VertexId v) {
              return v == a || !G.adjacent(v, a);
            })) {
          continue;
        }
        best = EndPair{i, j};
      }
      return best;
    }

  }  // namespace

  BarkDecomp barkauskas_decompose(GroupElement const& g) {
    auto const& G = g.graph();
    Word        h = g.word();
    Word        w1, w2, w2prime;

    // Peel conjugating syllables a^α ... a^-α.
    while (auto pr = find_end_pair(G, h, true, {})) {
      w1.push_back(h[pr->first]);
      h.erase(h.begin() + pr->last);
      h.erase(h.begin() + pr->first);
    }
    // Extract non-cancelling end pairs on a clique. A generator that only
    // becomes exposed after an extraction is non-adjacent to an extracted
    // one, so restricting to the clique leaves no further peeling possible.
    VertexSet clique;
    while (auto pr = find_end_pair(G, h, false, clique)) {
      clique.insert(h[pr->first].generator);
      w2.push_back(h[pr->first]);
      w2prime.insert(w2prime.begin(), h[pr->last]);
      h.erase(h.begin() + pr->last);
      h.erase(h.begin() + pr->first);
    }

    auto const& graph = g.graph_ptr();
    BarkDecomp  d{GroupElement(graph, w1), GroupElement(graph, w2),
                 GroupElement(graph, h), GroupElement(graph, w2prime)};
    auto check = verify_decomposition(g, d);
    if (!check.ok()) {
      for (std::size_t i = 0; i < check.conditions.size(); ++i) {
        if (!check.conditions[i].passed) {
          throw internal_error("decomposition of " + g.to_string()
                               + " violates condition ("
                               + std::to_string(i + 1)
                               + "): " + check.conditions[i].detail);
        }
      }
    }
    return d;
  }

  DecompositionCheck verify_decomposition(GroupElement const& g,
                                          BarkDecomp const&   d) {
    auto const&        G = g.graph();
    DecompositionCheck out;
    for (auto const* part : {&d.w1, &d.w2, &d.w3, &d.w2prime}) {
      if (!same_graph(g, *part)) {
        throw graph_mismatch();
      }
    }

    {  // (1)
      auto w1inv   = inverse_word(G, d.w1.word());
      Word spelled = concat({&d.w1.word(), &d.w2.word(), &d.w3.word(),
                             &d.w2prime.word(), &w1inv});
      auto c       = canonical_word(G, spelled);
      auto& r      = out.conditions[0];
      if (c != g.word()) {
        r.detail = "w1 w2 w3 w2' w1^-1 spells " + format_word(G, c)
                   + ", not " + g.to_string();
      } else if (c.size() != spelled.size()) {
        r.detail = "w1 w2 w3 w2' w1^-1 has " + std::to_string(spelled.size())
                   + " syllables but the normal form has "
                   + std::to_string(c.size());
      } else {
        r.passed = true;
        r.detail = "w1 w2 w3 w2' w1^-1 is a normal form for "
                   + g.to_string();
      }
    }
    {  // (2)
      auto  x = multiply(multiply(d.w3, d.w2prime), d.w2);
      auto& r = out.conditions[1];
      if (x.is_identity()) {
        r.passed = true;
        r.detail = "w3 w2' w2 is trivial";
      } else {
        r.passed = is_cyclically_normal(x);
        r.detail = "w3 w2' w2 = " + x.to_string()
                   + (r.passed ? " is" : " is not") + " cyclically normal";
      }
    }
    auto sp2  = support(d.w2);
    auto sp2p = support(d.w2prime);
    {  // (3)
      auto& r  = out.conditions[2];
      r.passed = sp2 == sp2p;
      r.detail = "sp(w2) = " + format_vertex_set(G, sp2)
                 + (r.passed ? " = " : " != ")
                 + "sp(w2') = " + format_vertex_set(G, sp2p);
    }
    {  // (4)
      auto& r = out.conditions[3];
      if (d.w2.is_identity()) {
        r.passed = true;
        r.detail = "w2 is trivial";
      } else {
        r.passed = G.is_clique(sp2);
        r.detail = "sp(w2) = " + format_vertex_set(G, sp2)
                   + (r.passed ? " induces" : " does not induce")
                   + " a complete subgraph";
      }
    }
    {  // (5)
      auto& r = out.conditions[4];
      if (d.w2.is_identity() || d.w2prime.is_identity()) {
        r.passed = true;
        r.detail = "F(w2) or L^(w2') is empty";
      } else {
        auto               f    = ends(d.w2).first;
        auto               lhat = ends(d.w2prime).last_inverse;
        std::vector<Syllable> common;
        std::set_intersection(f.begin(), f.end(), lhat.begin(), lhat.end(),
                              std::back_inserter(common));
        r.passed = common.empty();
        r.detail = r.passed ? "F(w2) and L^(w2') are disjoint"
                            : "F(w2) and L^(w2') share "
                                  + format_syllable(G, common.front());
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Powers
  ////////////////////////////////////////////////////////////////////////

  std::uint64_t least_valid_prime(ColoredGraph const& graph) {
    auto m = graph.max_finite_order();
    return arith::next_prime_above(m ? *m : 1);
  }

  void require_valid_prime(ColoredGraph const& graph, std::uint64_t p) {
    if (!arith::is_prime(p)) {
      throw precondition_error(std::to_string(p) + " is not prime");
    }
    auto m = graph.max_finite_order();
    if (m && p <= *m) {
      throw precondition_error("prime " + std::to_string(p)
                               + " does not exceed the finite colour order "
                               + std::to_string(*m));
    }
  }

  std::string to_string(PowerCase c) {
    switch (c) {
      case PowerCase::identity:
        return "identity";
      case PowerCase::clique:
        return "clique (exponents scaled by p)";
      case PowerCase::single_syllable:
        return "single syllable (w2 = e)";
      case PowerCase::repetition:
        return "repetition (w2 = e, w1 w3^p w1^-1)";
      case PowerCase::conjugated:
        return "conjugated (w1 w2 w0^(p-1) w3 w2' w1^-1)";
    }
    return "unknown";
  }

  namespace {
    std::int64_t scale_exponent(Color const& c, std::int64_t e,
                                std::uint64_t p) {
      if (c.is_infinite()) {
        return arith::checked_mul(e, static_cast<std::int64_t>(p));
      }
      auto prod = static_cast<unsigned __int128>(e) * p;
      return static_cast<std::int64_t>(prod % c.order());
    }

    constexpr std::size_t max_spelled_syllables = 10'000'000;
  }  // namespace

  PowerDerivation power_via_decomposition(GroupElement const& g,
                                          std::uint64_t       p) {
    auto const& G = g.graph();
    require_valid_prime(G, p);
    if (g.is_identity()) {
      return {PowerCase::identity, Word{}, g};
    }
    auto d     = barkauskas_decompose(g);
    auto w1inv = inverse_word(G, d.w1.word());

    PowerCase which;
    Word      middle;
    auto      scaled = [&](Word const& w) {
      for (auto s : w) {
        middle.push_back(
            {s.generator, scale_exponent(G.color(s.generator), s.exponent, p)});
      }
    };
    if (d.w3.is_identity()) {
      which = PowerCase::clique;
      scaled(multiply(d.w2, d.w2prime).word());
    } else if (d.w2.is_identity()) {
      auto const& w3 = d.w3.word();
      if (w3.size() > 1 && G.is_clique(support(d.w3))) {
        // commuting syllables: w3^p is not spelled by repetition
        which = PowerCase::clique;
        scaled(w3);
      } else if (w3.size() == 1) {
        which = PowerCase::single_syllable;
        middle.push_back({w3[0].generator,
                          scale_exponent(G.color(w3[0].generator),
                                         w3[0].exponent, p)});
      } else {
        which = PowerCase::repetition;
        if (w3.size() > max_spelled_syllables / p) {
          throw guard_error("power word too long to spell");
        }
        for (std::uint64_t i = 0; i < p; ++i) {
          middle.insert(middle.end(), w3.begin(), w3.end());
        }
      }
    } else {
      which      = PowerCase::conjugated;
      auto w0    = multiply(multiply(d.w3, d.w2prime), d.w2).word();
      if (w0.size() > max_spelled_syllables / p) {
        throw guard_error("power word too long to spell");
      }
      middle = d.w2.word();
      for (std::uint64_t i = 0; i + 1 < p; ++i) {
        middle.insert(middle.end(), w0.begin(), w0.end());
      }
      middle.insert(middle.end(), d.w3.word().begin(), d.w3.word().end());
      middle.insert(middle.end(), d.w2prime.word().begin(),
                    d.w2prime.word().end());
    }
    Word spelled = concat({&d.w1.word(), &middle, &w1inv});
    auto value   = canonical(g.graph_ptr(), spelled);
    return {which, std::move(spelled), std::move(value)};
  }

  bool power_support_check(GroupElement const& g, std::uint64_t p) {
    require_valid_prime(g.graph(), p);
    auto before = support(g);
    auto after  = support(power(g, static_cast<std::int64_t>(p)));
    return std::includes(after.begin(), after.end(), before.begin(),
                         before.end());
  }

}  // namespace gpc
