#include "gpc/words.hpp"

#include <algorithm>
#include <charconv>

#include "gpc/arith.hpp"
#include "gpc/errors.hpp"

namespace gpc {

  std::int64_t normalize_exponent(Color const& c, std::int64_t e) noexcept {
    return c.is_infinite() ? e : arith::mod(e, c.order());
  }

  Syllable inverse(ColoredGraph const& g, Syllable s) {
    auto const& c = g.color(s.generator);
    return {s.generator,
            normalize_exponent(c, c.is_infinite() ? arith::checked_neg(s.exponent)
                                                  : -s.exponent)};
  }

  ////////////////////////////////////////////////////////////////////////
  // Text
  ////////////////////////////////////////////////////////////////////////

  Word parse_word(ColoredGraph const& g, std::string_view text) {
    Word        out;
    std::size_t i = 0;
    auto        ws = [](char c) {
      return c == ' ' || c == '\t' || c == '\n' || c == '\r';
    };
    std::vector<std::string_view> tokens;
    while (i < text.size()) {
      while (i < text.size() && ws(text[i])) {
        ++i;
      }
      std::size_t j = i;
      while (j < text.size() && !ws(text[j])) {
        ++j;
      }
      if (j > i) {
        tokens.push_back(text.substr(i, j - i));
      }
      i = j;
    }
    if (tokens.size() == 1 && tokens[0] == "e" && !g.find("e")) {
      return out;
    }
    for (auto tok : tokens) {
      auto             caret = tok.find('^');
      std::string_view name  = tok.substr(0, caret);
      std::int64_t     e     = 1;
      if (caret != std::string_view::npos) {
        auto digits = tok.substr(caret + 1);
        auto first  = digits.data();
        auto last   = digits.data() + digits.size();
        if (!digits.empty() && *first == '+') {
          ++first;
        }
        auto [ptr, ec] = std::from_chars(first, last, e);
        if (digits.empty() || first == last || ec != std::errc()
            || ptr != last) {
          throw parse_error(0, "invalid exponent in syllable \""
                                   + std::string(tok) + "\"");
        }
        if (e == 0) {
          throw parse_error(0, "exponent 0 in syllable \"" + std::string(tok)
                                   + "\"");
        }
      }
      auto v = g.find(name);
      if (!v) {
        throw parse_error(0, "undeclared vertex \"" + std::string(name)
                                 + "\" in syllable \"" + std::string(tok)
                                 + "\"");
      }
      auto n = normalize_exponent(g.color(*v), e);
      if (n != 0) {
        out.push_back({*v, n});
      }
    }
    return out;
  }

  std::string format_syllable(ColoredGraph const& g, Syllable s) {
    return g.name(s.generator) + "^" + std::to_string(s.exponent);
  }

  std::string format_word(ColoredGraph const& g, Word const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    for (auto const& s : w) {
      if (!out.empty()) {
        out += ' ';
      }
      out += format_syllable(g, s);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Normal forms
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Word normalized(ColoredGraph const& g, Word w) {
      std::size_t k = 0;
      for (auto const& s : w) {
        if (s.generator >= g.size()) {
          throw precondition_error("syllable generator "
                                   + std::to_string(s.generator)
                                   + " is not a vertex");
        }
        auto e = normalize_exponent(g.color(s.generator), s.exponent);
        if (e != 0) {
          w[k++] = {s.generator, e};
        }
      }
      w.resize(k);
      return w;
    }

    std::int64_t add_exponents(Color const& c, std::int64_t a, std::int64_t b) {
      if (c.is_infinite()) {
        return arith::checked_add(a, b);
      }
      // both already in [0, q) with q < 2^63
      auto sum = static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b);
      return static_cast<std::int64_t>(sum % c.order());
    }

    bool blocks(ColoredGraph const& g, VertexId earlier, VertexId later) {
      return earlier == later || !g.adjacent(earlier, later);
    }
  }  // namespace

  Word reduce(ColoredGraph const& g, Word w) {
    w             = normalized(g, std::move(w));
    std::size_t q = 1;
    // Invariant: no mergeable pair lies entirely inside w[0, q).
    while (q < w.size()) {
      std::size_t p     = q;
      bool        found = false;
      while (p > 0) {
        --p;
        if (w[p].generator == w[q].generator) {
          found = true;
          break;
        }
        if (!g.adjacent(w[p].generator, w[q].generator)) {
          break;
        }
      }
      if (!found) {
        ++q;
        continue;
      }
      auto e = add_exponents(g.color(w[p].generator), w[p].exponent,
                             w[q].exponent);
      w.erase(w.begin() + q);
      if (e == 0) {
        w.erase(w.begin() + p);
      } else {
        w[p].exponent = e;
      }
      // Only pairs ending at index >= p can be new.
      q = std::max<std::size_t>(p, 1);
    }
    return w;
  }

  Word canonical_word(ColoredGraph const& g, Word const& w) {
    Word const  r = reduce(g, w);
    std::size_t n = r.size();
    // blockers[i] = number of remaining earlier occurrences that do not
    // commute with occurrence i
    std::vector<std::size_t> blockers(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (blocks(g, r[j].generator, r[i].generator)) {
          ++blockers[i];
        }
      }
    }
    std::vector<bool> taken(n, false);
    Word              out;
    out.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (!taken[i] && blockers[i] == 0
            && (best == n || r[i] < r[best])) {
          best = i;
        }
      }
      taken[best] = true;
      out.push_back(r[best]);
      for (std::size_t k = best + 1; k < n; ++k) {
        if (!taken[k] && blocks(g, r[best].generator, r[k].generator)) {
          --blockers[k];
        }
      }
    }
    return out;
  }

  std::vector<bool> front_movable(ColoredGraph const& g, Word const& w) {
    std::vector<bool> out(w.size(), true);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (blocks(g, w[j].generator, w[i].generator)) {
          out[i] = false;
          break;
        }
      }
    }
    return out;
  }

  std::vector<bool> last_movable(ColoredGraph const& g, Word const& w) {
    std::vector<bool> out(w.size(), true);
    for (std::size_t i = 0; i < w.size(); ++i) {
      for (std::size_t j = i + 1; j < w.size(); ++j) {
        if (blocks(g, w[j].generator, w[i].generator)) {
          out[i] = false;
          break;
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // GroupElement
  ////////////////////////////////////////////////////////////////////////

  GroupElement::GroupElement(GraphPtr graph, Word const& w)
      : _graph(std::move(graph)) {
    if (_graph == nullptr) {
      throw precondition_error("group element without a graph");
    }
    _word = canonical_word(*_graph, w);
  }

  GroupElement GroupElement::identity(GraphPtr graph) {
    return GroupElement(std::move(graph), Word{});
  }

  GroupElement GroupElement::generator(GraphPtr graph, VertexId v,
                                       std::int64_t exponent) {
    return GroupElement(std::move(graph), Word{{v, exponent}});
  }

  GroupElement GroupElement::parse(GraphPtr graph, std::string_view text) {
    if (graph == nullptr) {
      throw precondition_error("group element without a graph");
    }
    auto w = parse_word(*graph, text);
    return GroupElement(std::move(graph), w);
  }

  bool GroupElement::operator==(GroupElement const& that) const {
    return equal(*this, that);
  }

  bool same_graph(GroupElement const& g, GroupElement const& h) noexcept {
    return g.graph_ptr() == h.graph_ptr() || g.graph() == h.graph();
  }

  GroupElement canonical(GraphPtr graph, Word const& w) {
    return GroupElement(std::move(graph), w);
  }

  Word concat(std::initializer_list<Word const*> parts) {
    Word out;
    for (auto const* p : parts) {
      out.insert(out.end(), p->begin(), p->end());
    }
    return out;
  }

  Word inverse_word(ColoredGraph const& g, Word const& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      out.push_back(inverse(g, *it));
    }
    return out;
  }

  GroupElement multiply(GroupElement const& g, GroupElement const& h) {
    if (!same_graph(g, h)) {
      throw graph_mismatch();
    }
    return GroupElement(g.graph_ptr(), concat({&g.word(), &h.word()}));
  }

  GroupElement invert(GroupElement const& g) {
    return GroupElement(g.graph_ptr(), inverse_word(g.graph(), g.word()));
  }

  GroupElement power(GroupElement const& g, std::int64_t m) {
    if (m < 0) {
      return power(invert(g), arith::checked_neg(m));
    }
    auto result = GroupElement::identity(g.graph_ptr());
    auto base   = g;
    while (m > 0) {
      if (m & 1) {
        result = multiply(result, base);
      }
      m >>= 1;
      if (m > 0) {
        base = multiply(base, base);
      }
    }
    return result;
  }

  bool equal(GroupElement const& g, GroupElement const& h) {
    if (!same_graph(g, h)) {
      throw graph_mismatch();
    }
    return g.word() == h.word();
  }

  GroupElement project(GroupElement const& g, VertexSet const& A) {
    if (!A.empty() && *A.rbegin() >= g.graph().size()) {
      throw precondition_error("vertex id " + std::to_string(*A.rbegin())
                               + " is not a vertex of the graph");
    }
    Word kept;
    for (auto const& s : g.word()) {
      if (A.count(s.generator) != 0) {
        kept.push_back(s);
      }
    }
    return GroupElement(g.graph_ptr(), kept);
  }

}  // namespace gpc
