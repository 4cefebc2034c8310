#include "gpc/oracle.hpp"

#include <algorithm>
#include <deque>

#include "gpc/arith.hpp"
#include "gpc/errors.hpp"

namespace gpc::oracle {

  namespace {

    void guard(Word const& w) {
      if (w.size() > max_word_syllables) {
        throw guard_error("oracle input has " + std::to_string(w.size())
                          + " syllables, limit is "
                          + std::to_string(max_word_syllables));
      }
    }

    bool commute(ColoredGraph const& g, Syllable x, Syllable y) {
      return x.generator != y.generator && g.adjacent(x.generator, y.generator);
    }

    // Merge positions p < q into one syllable at p (or delete both).
    Word merged(ColoredGraph const& g, Word const& w, std::size_t p,
                std::size_t q) {
      auto const&  c = g.color(w[p].generator);
      std::int64_t e = arith::checked_add(w[p].exponent, w[q].exponent);
      if (c.is_finite()) {
        e = arith::mod(e, c.order());
      }
      Word out;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (i == q || (i == p && e == 0)) {
          continue;
        }
        out.push_back(i == p ? Syllable{w[p].generator, e} : w[i]);
      }
      return out;
    }

    std::vector<Word> merge_successors(ColoredGraph const& g, Word const& w) {
      std::vector<Word> out;
      for (std::size_t p = 0; p < w.size(); ++p) {
        for (std::size_t q = p + 1; q < w.size(); ++q) {
          if (w[p].generator != w[q].generator) {
            continue;
          }
          bool ok = true;
          for (std::size_t k = p + 1; k < q && ok; ++k) {
            ok = g.adjacent(w[p].generator, w[k].generator);
          }
          if (ok) {
            out.push_back(merged(g, w, p, q));
          }
        }
      }
      return out;
    }

    Word cleaned(ColoredGraph const& g, Word const& w) {
      Word out;
      for (auto s : w) {
        auto const& c = g.color(s.generator);
        auto e = c.is_finite() ? arith::mod(s.exponent, c.order()) : s.exponent;
        if (e != 0) {
          out.push_back({s.generator, e});
        }
      }
      return out;
    }

  }  // namespace

  std::set<Word> shuffle_closure(ColoredGraph const& g, Word const& w) {
    guard(w);
    std::set<Word>   seen{w};
    std::deque<Word> todo{w};
    while (!todo.empty()) {
      Word x = std::move(todo.front());
      todo.pop_front();
      for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        if (commute(g, x[i], x[i + 1])) {
          Word y = x;
          std::swap(y[i], y[i + 1]);
          if (seen.insert(y).second) {
            todo.push_back(std::move(y));
          }
        }
      }
    }
    return seen;
  }

  std::set<Word> exhaustive_reduce(ColoredGraph const& g, Word const& w) {
    guard(w);
    Word const       start = cleaned(g, w);
    std::set<Word>   seen{start};
    std::deque<Word> todo{start};
    std::set<Word>   out;
    while (!todo.empty()) {
      Word x = std::move(todo.front());
      todo.pop_front();
      auto next = merge_successors(g, x);
      if (next.empty()) {
        out.insert(x);
      }
      for (auto& y : next) {
        if (seen.insert(y).second) {
          todo.push_back(std::move(y));
        }
      }
    }
    return out;
  }

  bool oracle_equal(ColoredGraph const& g, Word const& w1, Word const& w2) {
    std::set<Word> c1;
    for (auto const& r : exhaustive_reduce(g, w1)) {
      auto c = shuffle_closure(g, r);
      c1.insert(c.begin(), c.end());
    }
    for (auto const& r : exhaustive_reduce(g, w2)) {
      for (auto const& x : shuffle_closure(g, r)) {
        if (c1.count(x) != 0) {
          return true;
        }
      }
    }
    return false;
  }

  Word oracle_key(ColoredGraph const& g, Word const& w) {
    auto reduced = exhaustive_reduce(g, w);
    return *shuffle_closure(g, *reduced.begin()).begin();
  }

  std::vector<Word> enumerate_ball(ColoredGraph const& g, std::size_t radius,
                                   std::int64_t infinite_exponent_bound) {
    if (radius > max_ball_radius) {
      throw guard_error("ball radius " + std::to_string(radius)
                        + " exceeds " + std::to_string(max_ball_radius));
    }
    if (g.size() > max_ball_vertices) {
      throw guard_error("ball enumeration limited to "
                        + std::to_string(max_ball_vertices) + " vertices");
    }
    std::vector<Syllable> letters;
    for (VertexId v = 0; v < g.size(); ++v) {
      auto const& c = g.color(v);
      if (c.is_finite()) {
        for (std::uint64_t e = 1; e < c.order(); ++e) {
          letters.push_back({v, static_cast<std::int64_t>(e)});
        }
      } else {
        for (std::int64_t e = 1; e <= infinite_exponent_bound; ++e) {
          letters.push_back({v, e});
          letters.push_back({v, -e});
        }
      }
    }
    // Elements of word length <= r are those of length <= r - 1 times one
    // letter; each is kept as its key (a reduced word, so <= r syllables).
    std::set<Word>    ball{Word{}};
    std::vector<Word> frontier{Word{}};
    for (std::size_t r = 1; r <= radius && !frontier.empty(); ++r) {
      std::vector<Word> next;
      for (auto const& x : frontier) {
        for (auto const& s : letters) {
          Word y = x;
          y.push_back(s);
          auto key = oracle_key(g, y);
          if (ball.insert(key).second) {
            next.push_back(std::move(key));
          }
        }
      }
      frontier = std::move(next);
    }
    return std::vector<Word>(ball.begin(), ball.end());
  }

}  // namespace gpc::oracle
