#include "gpc/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <unordered_map>

#include "gpc/arith.hpp"
#include "gpc/errors.hpp"

namespace gpc {

  ////////////////////////////////////////////////////////////////////////
  // Color
  ////////////////////////////////////////////////////////////////////////

  Color Color::prime_power(std::uint64_t p, unsigned n) {
    if (!arith::is_prime(p)) {
      throw precondition_error(std::to_string(p) + " is not prime");
    }
    if (n == 0) {
      throw precondition_error("colour exponent must be at least 1");
    }
    std::uint64_t q = 1;
    for (unsigned i = 0; i < n; ++i) {
      if (__builtin_mul_overflow(q, p, &q)
          || q > static_cast<std::uint64_t>(
                 std::numeric_limits<std::int64_t>::max())) {
        throw precondition_error("colour order " + std::to_string(p) + "^"
                                 + std::to_string(n) + " does not fit");
      }
    }
    Color c;
    c._order    = q;
    c._prime    = p;
    c._exponent = n;
    return c;
  }

  Color Color::from_order(std::uint64_t q) {
    auto pk = arith::prime_power(q);
    if (!pk) {
      throw precondition_error(std::to_string(q) + " is not a prime power");
    }
    return prime_power(pk->first, pk->second);
  }

  std::string Color::to_string() const {
    return is_infinite() ? "inf" : std::to_string(_order);
  }

  Color Color::parse(std::string_view token) {
    if (token == "inf") {
      return infinite();
    }
    std::uint64_t q   = 0;
    auto          end = token.data() + token.size();
    auto [ptr, ec]    = std::from_chars(token.data(), end, q);
    if (token.empty() || ec != std::errc() || ptr != end) {
      throw parse_error(0, "invalid colour \"" + std::string(token)
                               + "\": expected a prime power or \"inf\"");
    }
    try {
      return from_order(q);
    } catch (precondition_error const& e) {
      throw parse_error(0, e.what());
    }
  }

  std::strong_ordering Color::operator<=>(Color const& that) const noexcept {
    if (is_infinite() || that.is_infinite()) {
      return is_infinite() <=> that.is_infinite();
    }
    return _order <=> that._order;
  }

  ////////////////////////////////////////////////////////////////////////
  // ColoredGraph
  ////////////////////////////////////////////////////////////////////////

  bool is_valid_vertex_name(std::string_view name) noexcept {
    auto alpha = [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (name.empty() || !alpha(name[0])) {
      return false;
    }
    return std::all_of(name.begin() + 1, name.end(), [&](char c) {
      return alpha(c) || digit(c);
    });
  }

  ColoredGraph::ColoredGraph(std::vector<std::string>                   names,
                             std::vector<Color>                         colors,
                             std::vector<std::pair<VertexId, VertexId>> edges)
      : _names(std::move(names)), _colors(std::move(colors)) {
    if (_names.size() != _colors.size()) {
      throw precondition_error("every vertex needs exactly one colour");
    }
    if (_names.size() > std::numeric_limits<VertexId>::max()) {
      throw precondition_error("too many vertices");
    }
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (!is_valid_vertex_name(_names[i])) {
        throw precondition_error("invalid vertex name \"" + _names[i] + "\"");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (_names[i] == _names[j]) {
          throw precondition_error("duplicate vertex \"" + _names[i] + "\"");
        }
      }
    }
    std::size_t const n = _names.size();
    _adj.assign(n * n, 0);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n) {
        throw precondition_error("edge endpoint out of range");
      }
      if (u == v) {
        throw precondition_error("self-loop at \"" + _names[u] + "\"");
      }
      if (_adj[u * n + v] == 0) {
        ++_edge_count;
      }
      _adj[u * n + v] = 1;
      _adj[v * n + u] = 1;
    }
  }

  std::optional<VertexId> ColoredGraph::find(std::string_view name) const {
    for (std::size_t i = 0; i < _names.size(); ++i) {
      if (_names[i] == name) {
        return static_cast<VertexId>(i);
      }
    }
    return std::nullopt;
  }

  VertexId ColoredGraph::id(std::string_view name) const {
    auto v = find(name);
    if (!v) {
      throw precondition_error("undeclared vertex \"" + std::string(name)
                               + "\"");
    }
    return *v;
  }

  std::vector<std::pair<VertexId, VertexId>> ColoredGraph::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(_edge_count);
    for (VertexId u = 0; u < size(); ++u) {
      for (VertexId v = u + 1; v < size(); ++v) {
        if (adjacent(u, v)) {
          out.emplace_back(u, v);
        }
      }
    }
    return out;
  }

  VertexSet ColoredGraph::all_vertices() const {
    VertexSet out;
    for (VertexId v = 0; v < size(); ++v) {
      out.insert(out.end(), v);
    }
    return out;
  }

  bool ColoredGraph::is_clique(VertexSet const& vs) const {
    for (auto it = vs.begin(); it != vs.end(); ++it) {
      for (auto jt = std::next(it); jt != vs.end(); ++jt) {
        if (!adjacent(*it, *jt)) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<std::uint64_t> ColoredGraph::max_finite_order() const {
    std::optional<std::uint64_t> out;
    for (auto const& c : _colors) {
      if (c.is_finite() && (!out || c.order() > *out)) {
        out = c.order();
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Graph files
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string_view> split_ws(std::string_view line) {
      std::vector<std::string_view> out;
      std::size_t                   i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'
                                   || line[i] == '\r')) {
          ++i;
        }
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t'
               && line[j] != '\r') {
          ++j;
        }
        if (j > i) {
          out.push_back(line.substr(i, j - i));
        }
        i = j;
      }
      return out;
    }
  }  // namespace

  ColoredGraph parse_graph(std::string_view text) {
    std::vector<std::string>                       names;
    std::vector<Color>                             colors;
    std::unordered_map<std::string, VertexId>      index;
    std::vector<std::pair<std::string_view, std::string_view>> edge_names;
    std::vector<std::size_t>                       edge_lines;

    std::size_t line_no = 0;
    std::size_t pos     = 0;
    while (pos <= text.size()) {
      std::size_t nl = text.find('\n', pos);
      if (nl == std::string_view::npos) {
        nl = text.size();
      }
      std::string_view line = text.substr(pos, nl - pos);
      pos                   = nl + 1;
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      auto tok = split_ws(line);
      if (tok.empty()) {
        continue;
      }
      if (tok[0] == "vertex") {
        if (tok.size() != 4 || tok[2] != "color") {
          throw parse_error(line_no,
                            "malformed line, expected "
                            "\"vertex <name> color <integer | inf>\"");
        }
        std::string name(tok[1]);
        if (!is_valid_vertex_name(name)) {
          throw parse_error(line_no, "invalid vertex name \"" + name + "\"");
        }
        if (index.count(name) != 0) {
          throw parse_error(line_no, "duplicate vertex \"" + name + "\"");
        }
        try {
          colors.push_back(Color::parse(tok[3]));
        } catch (parse_error const& e) {
          throw parse_error(line_no, e.what());
        }
        index.emplace(name, static_cast<VertexId>(names.size()));
        names.push_back(std::move(name));
      } else if (tok[0] == "edge") {
        if (tok.size() != 3) {
          throw parse_error(line_no,
                            "malformed line, expected \"edge <name> <name>\"");
        }
        edge_names.emplace_back(tok[1], tok[2]);
        edge_lines.push_back(line_no);
      } else {
        throw parse_error(line_no, "malformed line, unknown declaration \""
                                       + std::string(tok[0]) + "\"");
      }
    }

    std::vector<std::pair<VertexId, VertexId>> edges;
    for (std::size_t i = 0; i < edge_names.size(); ++i) {
      auto [a, b] = edge_names[i];
      auto ia     = index.find(std::string(a));
      auto ib     = index.find(std::string(b));
      if (ia == index.end() || ib == index.end()) {
        throw parse_error(edge_lines[i],
                          "undeclared vertex \""
                              + std::string(ia == index.end() ? a : b)
                              + "\" in edge");
      }
      if (ia->second == ib->second) {
        throw parse_error(edge_lines[i],
                          "self-loop at \"" + std::string(a) + "\"");
      }
      edges.emplace_back(ia->second, ib->second);
    }
    return ColoredGraph(std::move(names), std::move(colors), std::move(edges));
  }

  std::string serialize_graph(ColoredGraph const& g) {
    std::ostringstream out;
    for (VertexId v = 0; v < g.size(); ++v) {
      out << "vertex " << g.name(v) << " color " << g.color(v).to_string()
          << '\n';
    }
    for (auto [u, v] : g.edges()) {
      out << "edge " << g.name(u) << ' ' << g.name(v) << '\n';
    }
    return out.str();
  }

  ColoredGraph induced_subgraph(ColoredGraph const& g, VertexSet const& A) {
    std::vector<VertexId> kept(A.begin(), A.end());
    if (!kept.empty() && kept.back() >= g.size()) {
      throw precondition_error("vertex id " + std::to_string(kept.back())
                               + " is not a vertex of the graph");
    }
    std::vector<std::string> names;
    std::vector<Color>       colors;
    for (auto v : kept) {
      names.push_back(g.name(v));
      colors.push_back(g.color(v));
    }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (VertexId i = 0; i < kept.size(); ++i) {
      for (VertexId j = i + 1; j < kept.size(); ++j) {
        if (g.adjacent(kept[i], kept[j])) {
          edges.emplace_back(i, j);
        }
      }
    }
    return ColoredGraph(std::move(names), std::move(colors), std::move(edges));
  }

  VertexSet vertex_set(ColoredGraph const&              g,
                       std::vector<std::string> const& names) {
    VertexSet out;
    for (auto const& n : names) {
      out.insert(g.id(n));
    }
    return out;
  }

  std::string format_vertex_set(ColoredGraph const& g, VertexSet const& vs) {
    std::string out = "{";
    bool        first = true;
    for (auto v : vs) {
      if (!first) {
        out += ", ";
      }
      out += g.name(v);
      first = false;
    }
    return out + "}";
  }

}  // namespace gpc
