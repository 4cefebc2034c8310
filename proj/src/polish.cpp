#include "gpc/polish.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

#include "gpc/errors.hpp"

namespace gpc::polish {

  ////////////////////////////////////////////////////////////////////////
  // Cardinal
  ////////////////////////////////////////////////////////////////////////

  Cardinal Cardinal::operator+(Cardinal const& that) const {
    if (_kind == Kind::finite && that._kind == Kind::finite) {
      std::uint64_t r;
      if (__builtin_add_overflow(_n, that._n, &r)) {
        throw std::overflow_error("finite cardinal overflow");
      }
      return finite(r);
    }
    return std::max(*this, that);
  }

  Cardinal Cardinal::times_aleph0() const noexcept {
    if (is_zero()) {
      return *this;
    }
    return std::max(*this, aleph0());
  }

  std::string Cardinal::to_string() const {
    switch (_kind) {
      case Kind::finite:
        return std::to_string(_n);
      case Kind::aleph0:
        return "aleph0";
      case Kind::uncountable_lt_continuum:
        return "uncountable_lt_continuum";
      case Kind::continuum:
        return "continuum";
    }
    return "?";
  }

  std::optional<Cardinal> Cardinal::parse(std::string_view token) {
    if (token == "aleph0") {
      return aleph0();
    }
    if (token == "uncountable_lt_continuum") {
      return uncountable_lt_continuum();
    }
    if (token == "continuum") {
      return continuum();
    }
    std::uint64_t n   = 0;
    auto          end = token.data() + token.size();
    auto [ptr, ec]    = std::from_chars(token.data(), end, n);
    if (token.empty() || ec != std::errc() || ptr != end) {
      return std::nullopt;
    }
    return finite(n);
  }

  std::strong_ordering Cardinal::operator<=>(Cardinal const& that) const noexcept {
    if (_kind != that._kind) {
      return _kind <=> that._kind;
    }
    return _n <=> that._n;
  }

  ////////////////////////////////////////////////////////////////////////
  // SymbolicGraphSpec
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string color_mode_string(ColorMode const& m) {
      if (auto c = std::get_if<Color>(&m)) {
        return c->to_string();
      }
      return "many(" + std::get<CountablyManyColors>(m).per_color_size.to_string()
             + ")";
    }
  }  // namespace

  SymbolicGraphSpec::SymbolicGraphSpec(
      std::vector<ClassSpec>                              classes,
      std::map<std::pair<std::size_t, std::size_t>, Link> links)
      : _classes(std::move(classes)) {
    for (std::size_t i = 0; i < _classes.size(); ++i) {
      auto const& c = _classes[i];
      if (c.name.empty()) {
        throw precondition_error("class with empty name");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (_classes[j].name == c.name) {
          throw precondition_error("duplicate class \"" + c.name + "\"");
        }
      }
      if (auto m = std::get_if<CountablyManyColors>(&c.color)) {
        if (m->per_color_size.times_aleph0() != c.size) {
          throw precondition_error(
              "class \"" + c.name + "\" has size " + c.size.to_string()
              + " but countably many colours of size "
              + m->per_color_size.to_string() + " give "
              + m->per_color_size.times_aleph0().to_string());
        }
      }
    }
    for (auto const& [key, value] : links) {
      auto [i, j] = key;
      if (i >= _classes.size() || j >= _classes.size()) {
        throw precondition_error("link names a missing class");
      }
      if (i == j) {
        throw precondition_error("class \"" + _classes[i].name
                                 + "\" linked with itself");
      }
      _links[std::minmax(i, j)] = value;
    }
  }

  Link SymbolicGraphSpec::link(std::size_t i, std::size_t j) const {
    auto it = _links.find(std::minmax(i, j));
    return it == _links.end() ? Link::none : it->second;
  }

  SymbolicGraphSpec
  SymbolicGraphSpec::restricted(std::vector<std::size_t> const& keep) const {
    std::vector<ClassSpec>                              classes;
    std::map<std::pair<std::size_t, std::size_t>, Link> links;
    for (std::size_t a = 0; a < keep.size(); ++a) {
      classes.push_back(_classes.at(keep[a]));
      for (std::size_t b = a + 1; b < keep.size(); ++b) {
        links[{a, b}] = link(keep[a], keep[b]);
      }
    }
    return SymbolicGraphSpec(std::move(classes), std::move(links));
  }

  std::optional<std::size_t>
  SymbolicGraphSpec::find(std::string_view name) const {
    for (std::size_t i = 0; i < _classes.size(); ++i) {
      if (_classes[i].name == name) {
        return i;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Spec files
  ////////////////////////////////////////////////////////////////////////

  ParsedSpec parse_spec(std::string_view text) {
    std::vector<ClassSpec> classes;
    struct PendingLink {
      std::string a, b;
      Link        value;
      std::size_t line;
    };
    std::vector<PendingLink> pending;

    std::istringstream in{std::string(text)};
    std::string        raw;
    std::size_t        line_no = 0;
    while (std::getline(in, raw)) {
      ++line_no;
      if (auto hash = raw.find('#'); hash != std::string::npos) {
        raw.resize(hash);
      }
      std::istringstream       ls(raw);
      std::vector<std::string> tok;
      for (std::string t; ls >> t;) {
        tok.push_back(t);
      }
      if (tok.empty()) {
        continue;
      }
      if (tok[0] == "class") {
        if (tok.size() != 8 || tok[2] != "size" || tok[4] != "color"
            || tok[6] != "internal") {
          throw parse_error(line_no,
                            "malformed line, expected \"class <name> size "
                            "<size> color <colour> internal "
                            "<complete|discrete>\"");
        }
        if (!is_valid_vertex_name(tok[1])) {
          throw parse_error(line_no, "invalid class name \"" + tok[1] + "\"");
        }
        for (auto const& c : classes) {
          if (c.name == tok[1]) {
            throw parse_error(line_no, "duplicate class \"" + tok[1] + "\"");
          }
        }
        auto size = Cardinal::parse(tok[3]);
        if (!size) {
          throw parse_error(line_no, "invalid size \"" + tok[3] + "\"");
        }
        ColorMode mode = Color::infinite();
        auto const& ct = tok[5];
        if (ct.rfind("many(", 0) == 0 && ct.back() == ')') {
          auto per = Cardinal::parse(ct.substr(5, ct.size() - 6));
          if (!per) {
            throw parse_error(line_no, "invalid colour size in \"" + ct + "\"");
          }
          mode = CountablyManyColors{*per};
        } else {
          try {
            mode = Color::parse(ct);
          } catch (parse_error const& e) {
            throw parse_error(line_no, e.what());
          }
        }
        Internal internal;
        if (tok[7] == "complete") {
          internal = Internal::complete;
        } else if (tok[7] == "discrete") {
          internal = Internal::discrete;
        } else {
          throw parse_error(line_no, "invalid internal structure \"" + tok[7]
                                         + "\", expected complete or discrete");
        }
        classes.push_back({tok[1], *size, mode, internal});
      } else if (tok[0] == "link") {
        if (tok.size() != 4) {
          throw parse_error(line_no, "malformed line, expected \"link <name> "
                                     "<name> <all|none>\"");
        }
        Link value;
        if (tok[3] == "all") {
          value = Link::all;
        } else if (tok[3] == "none") {
          value = Link::none;
        } else {
          throw parse_error(line_no, "invalid link \"" + tok[3]
                                         + "\", expected all or none");
        }
        pending.push_back({tok[1], tok[2], value, line_no});
      } else {
        throw parse_error(line_no, "malformed line, unknown declaration \""
                                       + tok[0] + "\"");
      }
    }

    auto index = [&](std::string const& name, std::size_t line) {
      for (std::size_t i = 0; i < classes.size(); ++i) {
        if (classes[i].name == name) {
          return i;
        }
      }
      throw parse_error(line, "undeclared class \"" + name + "\"");
    };
    std::map<std::pair<std::size_t, std::size_t>, Link> links;
    for (auto const& l : pending) {
      auto i = index(l.a, l.line);
      auto j = index(l.b, l.line);
      if (i == j) {
        throw parse_error(l.line, "class \"" + l.a + "\" linked with itself");
      }
      auto key = std::minmax(i, j);
      auto it  = links.find(key);
      if (it != links.end() && it->second != l.value) {
        throw parse_error(l.line, "conflicting links between \"" + l.a
                                      + "\" and \"" + l.b + "\"");
      }
      links[key] = l.value;
    }
    ParsedSpec out;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        if (links.count({i, j}) == 0) {
          out.warnings.push_back("link " + classes[i].name + " "
                                 + classes[j].name + " not listed, using none");
        }
      }
    }
    try {
      out.spec = SymbolicGraphSpec(std::move(classes), std::move(links));
    } catch (precondition_error const& e) {
      throw parse_error(0, e.what());
    }
    return out;
  }

  std::string serialize_spec(SymbolicGraphSpec const& spec) {
    std::ostringstream out;
    auto const&        cs = spec.classes();
    for (auto const& c : cs) {
      out << "class " << c.name << " size " << c.size.to_string() << " color "
          << color_mode_string(c.color) << " internal "
          << (c.internal == Internal::complete ? "complete" : "discrete")
          << '\n';
    }
    for (std::size_t i = 0; i < cs.size(); ++i) {
      for (std::size_t j = i + 1; j < cs.size(); ++j) {
        out << "link " << cs[i].name << ' ' << cs[j].name << ' '
            << (spec.link(i, j) == Link::all ? "all" : "none") << '\n';
      }
    }
    return out.str();
  }

  ////////////////////////////////////////////////////////////////////////
  // Conditions (a)-(d)
  ////////////////////////////////////////////////////////////////////////

  namespace {

    std::string join(std::vector<std::string> const& xs) {
      std::string out;
      for (auto const& x : xs) {
        out += (out.empty() ? "" : ", ") + x;
      }
      return out;
    }

    // Why class i has a non-neighbour, or nullopt if it has none.
    std::optional<std::string> non_neighbour_reason(SymbolicGraphSpec const& s,
                                                    std::size_t i) {
      auto const& cs = s.classes();
      auto const& c  = cs[i];
      if (c.internal == Internal::discrete && c.size >= Cardinal::finite(2)) {
        return "class " + c.name + " is discrete";
      }
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (j != i && !cs[j].size.is_zero() && s.link(i, j) == Link::none) {
          return "class " + c.name + " is not linked to class " + cs[j].name;
        }
      }
      return std::nullopt;
    }

    // Total number of vertices per uniform colour.
    std::map<Color, Cardinal> color_totals(SymbolicGraphSpec const& s) {
      std::map<Color, Cardinal> out;
      for (auto const& c : s.classes()) {
        if (auto col = std::get_if<Color>(&c.color)) {
          auto it = out.find(*col);
          if (it == out.end()) {
            out.emplace(*col, c.size);
          } else {
            it->second = it->second + c.size;
          }
        }
      }
      return out;
    }

    DecompositionReport build_report(SymbolicGraphSpec const& s) {
      DecompositionReport      r;
      std::vector<std::size_t> countable;
      for (std::size_t i = 0; i < s.classes().size(); ++i) {
        if (s.classes()[i].size.is_countable()) {
          countable.push_back(i);
        }
      }
      r.countable_part = s.restricted(countable);
      for (auto const& [col, total] : color_totals(s)) {
        if (col.is_finite() && total.is_uncountable()) {
          r.vector_space_summands.push_back(
              {col.prime(), col.exponent(), Cardinal::continuum()});
        }
      }
      std::sort(r.vector_space_summands.begin(), r.vector_space_summands.end(),
                [](Summand const& x, Summand const& y) {
                  return std::tie(x.prime, x.exponent)
                         < std::tie(y.prime, y.exponent);
                });
      r.realizable_as_automorphism_group = true;
      return r;
    }

  }  // namespace

  PolishVerdict check_conditions(SymbolicGraphSpec const& spec) {
    PolishVerdict out;
    auto const&   cs = spec.classes();

    {  // (a) the vertices that have a non-neighbour form a countable set
      auto&                    r = out.conditions[0];
      Cardinal                 total = Cardinal::finite(0);
      std::vector<std::string> in_a;
      r.passed = true;
      for (std::size_t i = 0; i < cs.size(); ++i) {
        auto why = non_neighbour_reason(spec, i);
        if (!why) {
          continue;
        }
        total = total + cs[i].size;
        in_a.push_back(cs[i].name);
        if (cs[i].size.is_uncountable() && r.passed) {
          r.passed  = false;
          r.witness = *why + " and has size " + cs[i].size.to_string();
        }
      }
      if (r.passed) {
        r.witness = in_a.empty()
                        ? "countable A = {} (every vertex is adjacent to all "
                          "others)"
                        : "countable A = classes {" + join(in_a) + "} (size "
                              + total.to_string() + ")";
      }
    }
    auto totals = color_totals(spec);
    {  // (b) finitely many colours with uncountably many vertices
      auto&                    r = out.conditions[1];
      std::vector<std::string> uncountable;
      for (auto const& [col, total] : totals) {
        if (total.is_uncountable()) {
          uncountable.push_back(col.to_string());
        }
      }
      r.passed = true;
      for (auto const& c : cs) {
        auto m = std::get_if<CountablyManyColors>(&c.color);
        if (m != nullptr && m->per_color_size.is_uncountable()) {
          r.passed  = false;
          r.witness = "class " + c.name
                      + " has countably many colours with "
                      + m->per_color_size.to_string() + " vertices each";
          break;
        }
      }
      if (r.passed) {
        r.witness = std::to_string(uncountable.size())
                    + " colour(s) with uncountably many vertices"
                    + (uncountable.empty() ? "" : ": " + join(uncountable));
      }
    }
    {  // (c) countably many vertices of colour inf
      auto&                    r = out.conditions[2];
      std::vector<std::string> names;
      for (auto const& c : cs) {
        auto col = std::get_if<Color>(&c.color);
        if (col != nullptr && col->is_infinite()) {
          names.push_back(c.name);
        }
      }
      auto it    = totals.find(Color::infinite());
      auto total = it == totals.end() ? Cardinal::finite(0) : it->second;
      r.passed   = total.is_countable();
      r.witness  = "colour inf has " + total.to_string() + " vertices"
                  + (names.empty() ? "" : " (classes " + join(names) + ")");
    }
    {  // (d) each uncountable colour class has size continuum
      auto& r  = out.conditions[3];
      r.passed = true;
      std::vector<std::string> parts;
      for (auto const& [col, total] : totals) {
        parts.push_back(col.to_string() + ": " + total.to_string());
        if (r.passed && total.is_uncountable()
            && total != Cardinal::continuum()) {
          r.passed  = false;
          r.witness = "colour " + col.to_string() + " has "
                      + total.to_string() + " vertices";
        }
      }
      for (auto const& c : cs) {
        auto m = std::get_if<CountablyManyColors>(&c.color);
        if (m == nullptr) {
          continue;
        }
        parts.push_back("many(" + c.name + "): "
                        + m->per_color_size.to_string());
        if (r.passed && m->per_color_size.is_uncountable()
            && m->per_color_size != Cardinal::continuum()) {
          r.passed  = false;
          r.witness = "class " + c.name + " has colours with "
                      + m->per_color_size.to_string() + " vertices";
        }
      }
      if (r.passed) {
        r.witness = parts.empty() ? "no colours"
                                  : "colour totals " + join(parts);
      }
    }

    out.admits = std::all_of(out.conditions.begin(), out.conditions.end(),
                             [](ConditionResult const& c) { return c.passed; });
    if (out.admits) {
      out.report = build_report(spec);
    }
    return out;
  }

  DecompositionReport decomposition_report(SymbolicGraphSpec const& spec) {
    auto v = check_conditions(spec);
    if (!v.admits) {
      throw precondition_error(
          "decomposition requested for a spec that admits no Polish group "
          "topology");
    }
    return *v.report;
  }

  std::string to_string(SpecialTag t) {
    switch (t) {
      case SpecialTag::raag:
        return "RAAG";
      case SpecialTag::racg:
        return "RACG";
      case SpecialTag::general:
        return "general";
    }
    return "?";
  }

  SpecialClassification classify_special(SymbolicGraphSpec const& spec) {
    auto const& cs      = spec.classes();
    auto        uniform = [&](Color col) {
      return !cs.empty() && std::all_of(cs.begin(), cs.end(), [&](auto& c) {
        auto x = std::get_if<Color>(&c.color);
        return x != nullptr && *x == col;
      });
    };
    SpecialClassification out{SpecialTag::general, check_conditions(spec)};
    if (uniform(Color::infinite())) {
      out.tag = SpecialTag::raag;
      bool uncountable = std::any_of(cs.begin(), cs.end(), [](auto& c) {
        return c.size.is_uncountable();
      });
      if (uncountable && (out.verdict.admits || out.verdict.conditions[2].passed)) {
        throw internal_error("uncountable RAAG spec passes condition (c)");
      }
    } else if (uniform(Color::from_order(2))) {
      out.tag = SpecialTag::racg;
      auto const& c = out.verdict.conditions;
      if (out.verdict.admits != (c[0].passed && c[3].passed)) {
        throw internal_error("RACG verdict differs from (a) and (d)");
      }
    }
    return out;
  }

}  // namespace gpc::polish
