#ifndef GPC_PRESENTATION_HPP_
#define GPC_PRESENTATION_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gpc {

  using VertexId  = std::uint32_t;
  using VertexSet = std::set<VertexId>;

  // The order attached to a vertex: a prime power p^n (n >= 1) or infinity.
  class Color {
   public:
    static Color infinite() noexcept {
      return Color();
    }

    // Throws precondition_error unless p is prime, n >= 1 and p^n fits in
    // a signed 64-bit integer.
    static Color prime_power(std::uint64_t p, unsigned n);

    // Throws precondition_error unless q is a prime power.
    static Color from_order(std::uint64_t q);

    bool is_infinite() const noexcept {
      return _order == 0;
    }

    bool is_finite() const noexcept {
      return _order != 0;
    }

    // Only meaningful for finite colours.
    std::uint64_t order() const noexcept {
      return _order;
    }
    std::uint64_t prime() const noexcept {
      return _prime;
    }
    unsigned exponent() const noexcept {
      return _exponent;
    }

    // "inf" or the decimal order
    std::string to_string() const;

    // Accepts "inf" or a decimal prime power.
    static Color parse(std::string_view token);

    bool operator==(Color const&) const = default;
    // finite colours by order, infinity last
    std::strong_ordering operator<=>(Color const& that) const noexcept;

   private:
    Color() = default;

    std::uint64_t _order    = 0;  // 0 encodes infinity
    std::uint64_t _prime    = 0;
    unsigned      _exponent = 0;
  };

  // A finite simple graph with a colour on every vertex. Vertex ids are
  // 0, 1, ..., size() - 1 in declaration order; this order is the one used by
  // canonical forms.
  class ColoredGraph {
   public:
    ColoredGraph() = default;

    // Throws precondition_error on duplicate or invalid names, mismatched
    // lengths, self-loops, or out-of-range edge endpoints. Repeated edges are
    // collapsed.
    ColoredGraph(std::vector<std::string>                   names,
                 std::vector<Color>                         colors,
                 std::vector<std::pair<VertexId, VertexId>> edges);

    std::size_t size() const noexcept {
      return _names.size();
    }

    std::string const& name(VertexId v) const {
      return _names.at(v);
    }

    Color const& color(VertexId v) const {
      return _colors.at(v);
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }

    std::vector<Color> const& colors() const noexcept {
      return _colors;
    }

    bool adjacent(VertexId u, VertexId v) const noexcept {
      return _adj[u * _names.size() + v] != 0;
    }

    std::optional<VertexId> find(std::string_view name) const;

    // Throws precondition_error if the name is not declared.
    VertexId id(std::string_view name) const;

    // Unordered pairs (u < v), sorted.
    std::vector<std::pair<VertexId, VertexId>> edges() const;

    std::size_t edge_count() const noexcept {
      return _edge_count;
    }

    VertexSet all_vertices() const;

    // True iff every two distinct members of vs are adjacent.
    bool is_clique(VertexSet const& vs) const;

    // Largest finite colour order, or nullopt if every colour is infinite
    // (or the graph is empty).
    std::optional<std::uint64_t> max_finite_order() const;

    bool operator==(ColoredGraph const&) const = default;

   private:
    std::vector<std::string> _names;
    std::vector<Color>       _colors;
    std::vector<char>        _adj;  // size() x size(), row major
    std::size_t              _edge_count = 0;
  };

  using GraphPtr = std::shared_ptr<ColoredGraph const>;

  // Non-empty ASCII identifier: [A-Za-z_][A-Za-z0-9_]*
  bool is_valid_vertex_name(std::string_view name) noexcept;

  // Graph file format, one declaration per line, '#' starts a comment:
  //   vertex <name> color <integer | inf>
  //   edge <name> <name>
  // Throws parse_error carrying the 1-based line number.
  ColoredGraph parse_graph(std::string_view text);

  // Vertices in order, then edges sorted by their (vertex order) endpoint
  // pairs. parse_graph(serialize_graph(g)) == g.
  std::string serialize_graph(ColoredGraph const& g);

  // Vertices of A in inherited order, the edges of g between them and the
  // restricted colouring. Throws precondition_error if A has an id that is
  // not a vertex of g.
  ColoredGraph induced_subgraph(ColoredGraph const& g, VertexSet const& A);

  // Resolve a list of vertex names; throws precondition_error naming the
  // first undeclared one.
  VertexSet vertex_set(ColoredGraph const&              g,
                       std::vector<std::string> const& names);

  std::string format_vertex_set(ColoredGraph const& g, VertexSet const& vs);

}  // namespace gpc

#endif  // GPC_PRESENTATION_HPP_
