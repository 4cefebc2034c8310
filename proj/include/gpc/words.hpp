#ifndef GPC_WORDS_HPP_
#define GPC_WORDS_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gpc/presentation.hpp"

namespace gpc {

  // A power a^e of a single generator. For a generator of finite order q the
  // exponent lies in [1, q - 1]; for infinite order it is any non-zero
  // integer.
  struct Syllable {
    VertexId     generator;
    std::int64_t exponent;

    auto operator<=>(Syllable const&) const = default;
  };

  // A finite sequence of syllables over some ColoredGraph. Words produced by
  // reduce() and canonical_word() have distinct consecutive generators; input
  // words may not.
  using Word = std::vector<Syllable>;

  // Exponent representative: [0, q - 1] for order q (0 means trivial), the
  // value itself for infinite order.
  std::int64_t normalize_exponent(Color const& c, std::int64_t e) noexcept;

  // The syllable spelling the inverse of s, normalized.
  Syllable inverse(ColoredGraph const& g, Syllable s);

  // Syllables separated by whitespace, each <name> or <name>^<integer>.
  // Exponent 0 is a parse error; exponents are normalized and syllables that
  // become trivial (e.g. a^2 with a of order 2) are dropped. The empty string
  // and "e" (when no vertex is named e) denote the empty word.
  Word parse_word(ColoredGraph const& g, std::string_view text);

  // "a^1 c^-2 b^1"; the empty word prints as "e".
  std::string format_word(ColoredGraph const& g, Word const& w);
  std::string format_syllable(ColoredGraph const& g, Syllable s);

  // Merges equal generators p < q whose generator is adjacent to every
  // generator strictly between them, leftmost-innermost first, until no such
  // pair is left. The result is a normal form for the element w spells.
  Word reduce(ColoredGraph const& g, Word w);

  // reduce() followed by the lexicographically least word in the shuffle
  // class (order: generator by vertex order, then exponent).
  Word canonical_word(ColoredGraph const& g, Word const& w);

  // The occurrences that can be moved to the front (resp. back) by swapping
  // adjacent commuting syllables.
  std::vector<bool> front_movable(ColoredGraph const& g, Word const& w);
  std::vector<bool> last_movable(ColoredGraph const& g, Word const& w);

  // An element of G(Γ, p), stored by its canonical word. Two elements are
  // equal iff they share a graph and their canonical words coincide.
  class GroupElement {
   public:
    // Canonicalizes w. Throws precondition_error on a null graph or a
    // syllable that names no vertex.
    GroupElement(GraphPtr graph, Word const& w);

    static GroupElement identity(GraphPtr graph);
    static GroupElement generator(GraphPtr graph, VertexId v,
                                  std::int64_t exponent = 1);
    static GroupElement parse(GraphPtr graph, std::string_view text);

    Word const& word() const noexcept {
      return _word;
    }

    GraphPtr const& graph_ptr() const noexcept {
      return _graph;
    }

    ColoredGraph const& graph() const noexcept {
      return *_graph;
    }

    // syllable count of the normal form
    std::size_t length() const noexcept {
      return _word.size();
    }

    bool is_identity() const noexcept {
      return _word.empty();
    }

    std::string to_string() const {
      return format_word(*_graph, _word);
    }

    // Throws graph_mismatch for elements of different graphs.
    bool operator==(GroupElement const& that) const;

    // Total order (by canonical word) for use in ordered containers; only
    // meaningful within one graph.
    bool operator<(GroupElement const& that) const noexcept {
      return _word < that._word;
    }

   private:
    struct trusted {};
    GroupElement(trusted, GraphPtr graph, Word w)
        : _graph(std::move(graph)), _word(std::move(w)) {}

    friend GroupElement canonical(GraphPtr, Word const&);
    friend GroupElement project(GroupElement const&, VertexSet const&);

    GraphPtr _graph;
    Word     _word;
  };

  bool same_graph(GroupElement const& g, GroupElement const& h) noexcept;

  GroupElement canonical(GraphPtr graph, Word const& w);

  // Throws graph_mismatch.
  GroupElement multiply(GroupElement const& g, GroupElement const& h);
  GroupElement invert(GroupElement const& g);
  GroupElement power(GroupElement const& g, std::int64_t m);
  bool         equal(GroupElement const& g, GroupElement const& h);

  inline GroupElement operator*(GroupElement const& g, GroupElement const& h) {
    return multiply(g, h);
  }

  // The image of g under the retraction onto G(Γ_A, p|A): generators outside
  // A are sent to the identity. Throws precondition_error if A names a
  // non-vertex.
  GroupElement project(GroupElement const& g, VertexSet const& A);

  // Word concatenation helper.
  Word concat(std::initializer_list<Word const*> parts);

  Word inverse_word(ColoredGraph const& g, Word const& w);

}  // namespace gpc

#endif  // GPC_WORDS_HPP_
