#include "gpc/roots.hpp"

#include <algorithm>
#include <cstdlib>

#include "gpc/arith.hpp"
#include "gpc/errors.hpp"
#include "gpc/structure.hpp"

namespace gpc {

  namespace {

    void require(std::vector<std::pair<std::string, bool>>& list,
                 std::string name, bool holds) {
      list.emplace_back(name, holds);
      if (!holds) {
        throw hypothesis_error(std::move(name));
      }
    }

    void check_ids(ColoredGraph const& G, std::initializer_list<VertexId> vs) {
      for (auto v : vs) {
        if (v >= G.size()) {
          throw precondition_error("vertex id " + std::to_string(v)
                                   + " is not a vertex of the graph");
        }
      }
    }

    bool pairwise_distinct(std::vector<VertexId> vs) {
      std::sort(vs.begin(), vs.end());
      return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
    }

    GroupElement gen(GroupElement const& g, VertexId v, std::int64_t e) {
      return GroupElement::generator(g.graph_ptr(), v, e);
    }

  }  // namespace

  RootCertificate pattern1_no_root(GroupElement const& g, VertexId a1,
                                   VertexId a2, VertexId b1, VertexId b2) {
    auto const& G = g.graph();
    check_ids(G, {a1, a2, b1, b2});
    std::vector<std::pair<std::string, bool>> hyp;
    auto sp = support(g);
    require(hyp, "a1, a2, b1, b2 distinct", pairwise_distinct({a1, a2, b1, b2}));
    require(hyp, "a1 not in sp(g)", sp.count(a1) == 0);
    require(hyp, "a2 not in sp(g)", sp.count(a2) == 0);
    require(hyp, "b1 not in sp(g)", sp.count(b1) == 0);
    require(hyp, "b2 not in sp(g)", sp.count(b2) == 0);
    require(hyp, "a1 not adjacent to b1", !G.adjacent(a1, b1));
    require(hyp, "a2 not adjacent to b2", !G.adjacent(a2, b2));

    auto star = g * gen(g, a1, -1) * gen(g, a2, 1) * gen(g, b1, -1)
                * gen(g, b2, 1);
    VertexSet A{a2, b2};
    auto      image    = project(star, A);
    auto      expected = gen(g, a2, 1) * gen(g, b2, 1);
    if (!(image == expected)) {
      throw internal_error("retraction of " + star.to_string() + " is "
                           + image.to_string() + ", expected "
                           + expected.to_string());
    }
    return RootCertificate{1, star, A, image, std::nullopt, std::nullopt,
                           std::move(hyp)};
  }

  RootCertificate pattern2_no_root(GroupElement const& g, VertexId a,
                                   VertexId b1, VertexId b2, VertexId b3,
                                   VertexId b4) {
    auto const& G = g.graph();
    check_ids(G, {a, b1, b2, b3, b4});
    std::vector<std::pair<std::string, bool>> hyp;
    auto sp = support(g);
    require(hyp, "a, b1, b2, b3, b4 distinct",
            pairwise_distinct({a, b1, b2, b3, b4}));
    VertexId const bs[] = {b1, b2, b3, b4};
    for (int i = 0; i < 4; ++i) {
      require(hyp, "a not adjacent to b" + std::to_string(i + 1),
              !G.adjacent(a, bs[i]));
    }
    for (int i = 0; i < 4; ++i) {
      require(hyp, "b" + std::to_string(i + 1) + " not in sp(g)",
              sp.count(bs[i]) == 0);
    }

    auto tail = gen(g, a, -1) * gen(g, b1, -1) * gen(g, b2, 1) * gen(g, a, 1)
                * gen(g, b3, -1) * gen(g, b4, 1);
    auto      star = g * tail;
    VertexSet A{a, b1, b2, b3, b4};
    auto      image = project(star, A);
    auto      pg    = project(g, A);

    RootCertificate cert{2, star, A, image, std::nullopt, std::nullopt,
                         std::move(hyp)};
    if (pg.is_identity()) {
      cert.projection_case = 1;
    } else {
      if (support(pg) != VertexSet{a}) {
        throw internal_error("retraction of g has support "
                             + format_vertex_set(G, support(pg))
                             + ", expected {" + G.name(a) + "}");
      }
      cert.projection_case = 2;
      auto lead            = pg * gen(g, a, -1);
      cert.alpha = lead.is_identity() ? 0 : lead.word().front().exponent;
    }
    auto expected = pg * tail;
    if (!(image == expected)) {
      throw internal_error("retraction of " + star.to_string() + " is "
                           + image.to_string() + ", expected "
                           + expected.to_string());
    }
    return cert;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bounded root search
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class RootSearcher {
     public:
      RootSearcher(GroupElement const& h, std::int64_t n, std::size_t max_len,
                   std::int64_t bound)
          : _G(h.graph()),
            _target(h.word()),
            _n(n),
            _max_len(max_len),
            _ab(_G.size(), 0),
            _ab_target(_G.size(), 0) {
        for (VertexId v = 0; v < _G.size(); ++v) {
          auto const& c = _G.color(v);
          if (c.is_infinite()) {
            for (std::int64_t e = -bound; e <= bound; ++e) {
              if (e != 0) {
                _choices.push_back({v, e});
              }
            }
          } else {
            for (std::uint64_t e = 1; e < c.order(); ++e) {
              _choices.push_back({v, static_cast<std::int64_t>(e)});
            }
          }
        }
        // The abelianization is a homomorphism onto the product of the
        // vertex groups, so n * ab(x) = ab(h) is necessary for x^n = h.
        for (auto const& s : _target) {
          _ab_target[s.generator] = add(s.generator, _ab_target[s.generator],
                                        s.exponent);
        }
        for (VertexId v = 0; v < _G.size(); ++v) {
          if (!matches(v)) {
            ++_mismatches;
          }
        }
      }

      // Iterative deepening: the first hit is the shortest, and within a
      // length the depth-first order is lexicographic.
      void run() {
        for (_len = 0; _len <= _max_len && !_best; ++_len) {
          visit();
        }
      }

      std::optional<Word> const& best() const noexcept {
        return _best;
      }

      std::uint64_t visited() const noexcept {
        return _visited;
      }
      std::uint64_t powered() const noexcept {
        return _powered;
      }

     private:
      std::int64_t add(VertexId v, std::int64_t x, std::int64_t y) const {
        auto const& c = _G.color(v);
        if (c.is_infinite()) {
          return arith::checked_add(x, y);
        }
        return arith::mod(x + y, c.order());
      }

      bool matches(VertexId v) const {
        auto const& c = _G.color(v);
        auto        nx = static_cast<__int128>(_n) * _ab[v];
        if (c.is_infinite()) {
          return nx == _ab_target[v];
        }
        auto m = static_cast<__int128>(c.order());
        return ((nx % m) + m) % m == _ab_target[v];
      }

      // s may follow the current canonical word with the result still
      // canonical (reduced and lexicographically least in its class).
      bool extends(Syllable s) const {
        for (std::size_t k = _word.size(); k-- > 0;) {
          auto g = _word[k].generator;
          if (g == s.generator) {
            return false;
          }
          if (!_G.adjacent(g, s.generator)) {
            return true;
          }
          if (g > s.generator) {
            return false;
          }
        }
        return true;
      }

      void test_candidate() {
        ++_visited;
        if (_mismatches != 0) {
          return;
        }
        ++_powered;
        Word repeated;
        repeated.reserve(_word.size() * static_cast<std::size_t>(_n));
        for (std::int64_t i = 0; i < _n; ++i) {
          repeated.insert(repeated.end(), _word.begin(), _word.end());
        }
        if (canonical_word(_G, repeated) == _target) {
          _best = _word;
        }
      }

      void push(Syllable s) {
        auto v     = s.generator;
        bool was   = matches(v);
        _ab[v]     = add(v, _ab[v], s.exponent);
        bool is    = matches(v);
        _mismatches += static_cast<int>(was) - static_cast<int>(is);
        _word.push_back(s);
      }

      void pop() {
        auto s   = _word.back();
        auto v   = s.generator;
        _word.pop_back();
        bool was = matches(v);
        _ab[v]   = add(v, _ab[v], arith::checked_neg(s.exponent));
        bool is  = matches(v);
        _mismatches += static_cast<int>(was) - static_cast<int>(is);
      }

      void visit() {
        if (_word.size() == _len) {
          test_candidate();
          return;
        }
        for (auto const& s : _choices) {
          if (_best) {
            return;
          }
          if (extends(s)) {
            push(s);
            visit();
            pop();
          }
        }
      }

      ColoredGraph const&       _G;
      Word const&               _target;
      std::int64_t              _n;
      std::size_t               _max_len;
      std::size_t               _len = 0;
      std::vector<Syllable>     _choices;
      std::vector<std::int64_t> _ab;
      std::vector<std::int64_t> _ab_target;
      int                       _mismatches = 0;
      Word                      _word;
      std::optional<Word>       _best;
      std::uint64_t             _visited = 0;
      std::uint64_t             _powered = 0;
    };

  }  // namespace

  RootSearchResult brute_force_root_search(GroupElement const&      h,
                                           std::int64_t             n,
                                           RootSearchOptions const& opts) {
    if (n < 2) {
      throw precondition_error("root degree must be at least 2, got "
                               + std::to_string(n));
    }
    std::int64_t bound = 4;
    if (opts.infinite_exponent_bound) {
      bound = *opts.infinite_exponent_bound;
      if (bound < 1) {
        throw precondition_error("exponent bound must be positive");
      }
    } else {
      for (auto const& s : h.word()) {
        if (h.graph().color(s.generator).is_infinite()) {
          bound = std::max(bound,
                           arith::checked_mul(n, std::llabs(s.exponent)));
        }
      }
    }
    RootSearcher searcher(h, n, opts.max_len, bound);
    searcher.run();
    RootSearchResult out;
    out.candidates_visited      = searcher.visited();
    out.candidates_powered      = searcher.powered();
    out.infinite_exponent_bound = bound;
    if (searcher.best()) {
      out.root = GroupElement(h.graph_ptr(), *searcher.best());
    }
    return out;
  }

}  // namespace gpc
