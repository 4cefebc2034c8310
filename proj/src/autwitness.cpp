#include "gpc/autwitness.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gpc/arith.hpp"
#include "gpc/errors.hpp"

namespace gpc::aut {

  MarkedDigraph::MarkedDigraph(
      std::size_t                                          vertex_count,
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
      std::vector<std::uint32_t>                           marks)
      : _n(vertex_count), _marks(std::move(marks)), _adj(_n * _n, 0) {
    if (_marks.size() != _n) {
      throw precondition_error("every vertex needs exactly one mark");
    }
    for (auto [u, v] : edges) {
      if (u >= _n || v >= _n) {
        throw precondition_error("edge endpoint out of range");
      }
      if (_marks[u] != _marks[v]) {
        throw precondition_error("edge joins vertices of different marks");
      }
      if (_adj[u * _n + v] == 0) {
        _adj[u * _n + v] = 1;
        _edges.emplace_back(u, v);
      }
    }
  }

  MarkedDigraph MarkedDigraph::unmarked() const {
    return MarkedDigraph(_n, _edges, std::vector<std::uint32_t>(_n, 0));
  }

  Permutation compose(Permutation const& first, Permutation const& then) {
    Permutation out(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      out[i] = then[first[i]];
    }
    return out;
  }

  namespace {
    Permutation identity_perm(std::size_t n) {
      Permutation id(n);
      std::iota(id.begin(), id.end(), 0u);
      return id;
    }

    Permutation inverse_perm(Permutation const& p) {
      Permutation out(p.size());
      for (std::uint32_t i = 0; i < p.size(); ++i) {
        out[p[i]] = i;
      }
      return out;
    }

    bool is_permutation(Permutation const& p) {
      std::vector<bool> seen(p.size(), false);
      for (auto x : p) {
        if (x >= p.size() || seen[x]) {
          return false;
        }
        seen[x] = true;
      }
      return true;
    }
  }  // namespace

  GroupTable::GroupTable(std::vector<Permutation> elements)
      : _elements(std::move(elements)) {
    if (_elements.empty()) {
      throw precondition_error("a group has at least the identity");
    }
    std::size_t const n = _elements.front().size();
    for (auto const& p : _elements) {
      if (p.size() != n || !is_permutation(p)) {
        throw precondition_error("elements must be permutations of one degree");
      }
    }
    std::sort(_elements.begin(), _elements.end());
    if (std::adjacent_find(_elements.begin(), _elements.end())
        != _elements.end()) {
      throw precondition_error("repeated group element");
    }
    auto contains = [&](Permutation const& p) {
      return std::binary_search(_elements.begin(), _elements.end(), p);
    };
    if (!contains(identity_perm(n))) {
      throw precondition_error("identity missing");
    }
    for (auto const& x : _elements) {
      if (!contains(inverse_perm(x))) {
        throw precondition_error("not closed under inverse");
      }
      for (auto const& y : _elements) {
        if (!contains(compose(x, y))) {
          throw precondition_error("not closed under composition");
        }
      }
    }
  }

  GroupTable GroupTable::generated_by(std::size_t                     degree,
                                      std::vector<Permutation> const& gens,
                                      std::size_t max_order) {
    std::set<Permutation>    seen{identity_perm(degree)};
    std::vector<Permutation> frontier{identity_perm(degree)};
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (auto const& x : frontier) {
        for (auto const& g : gens) {
          if (g.size() != degree || !is_permutation(g)) {
            throw precondition_error("generator is not a permutation of the "
                                     "given degree");
          }
          auto y = compose(x, g);
          if (seen.insert(y).second) {
            if (seen.size() > max_order) {
              throw guard_error("group exceeds "
                                + std::to_string(max_order) + " elements");
            }
            next.push_back(std::move(y));
          }
        }
      }
      frontier = std::move(next);
    }
    return GroupTable(std::vector<Permutation>(seen.begin(), seen.end()));
  }

  bool GroupTable::is_abelian() const {
    for (std::size_t i = 0; i < _elements.size(); ++i) {
      for (std::size_t j = i + 1; j < _elements.size(); ++j) {
        if (compose(_elements[i], _elements[j])
            != compose(_elements[j], _elements[i])) {
          return false;
        }
      }
    }
    return true;
  }

  std::uint64_t GroupTable::element_order(Permutation const& p) {
    auto const    id = identity_perm(p.size());
    auto          x  = p;
    std::uint64_t k  = 1;
    while (x != id) {
      x = compose(x, p);
      ++k;
    }
    return k;
  }

  std::map<std::uint64_t, std::uint64_t> GroupTable::order_profile() const {
    std::map<std::uint64_t, std::uint64_t> out;
    for (auto const& p : _elements) {
      ++out[element_order(p)];
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witness structures
  ////////////////////////////////////////////////////////////////////////

  MarkedDigraph build_witness_structure(std::uint64_t p, unsigned n,
                                        unsigned k) {
    if (!arith::is_prime(p)) {
      throw precondition_error(std::to_string(p) + " is not prime");
    }
    if (n == 0 || k == 0) {
      throw precondition_error("exponent and copy count must be at least 1");
    }
    std::uint64_t len;
    try {
      len = arith::ipow(p, n);
    } catch (std::overflow_error const&) {
      throw guard_error("structure too large to enumerate");
    }
    if (len > max_structure_size || len * k > max_structure_size) {
      throw guard_error("p^n * k = " + std::to_string(len) + " * "
                        + std::to_string(k) + " exceeds "
                        + std::to_string(max_structure_size));
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    std::vector<std::uint32_t>                           marks;
    for (std::uint32_t copy = 0; copy < k; ++copy) {
      auto base = static_cast<std::uint32_t>(copy * len);
      for (std::uint32_t i = 0; i < len; ++i) {
        edges.emplace_back(base + i, base + (i + 1) % len);
        marks.push_back(copy);
      }
    }
    return MarkedDigraph(len * k, std::move(edges), std::move(marks));
  }

  namespace {
    class AutSearch {
     public:
      explicit AutSearch(MarkedDigraph const& s)
          : _s(s), _image(s.size()), _used(s.size(), false) {}

      std::vector<Permutation> run() {
        extend(0);
        return std::move(_found);
      }

     private:
      bool consistent(std::uint32_t v, std::uint32_t w) const {
        if (_s.mark(v) != _s.mark(w) || _s.has_edge(v, v) != _s.has_edge(w, w)) {
          return false;
        }
        for (std::uint32_t u = 0; u < v; ++u) {
          auto fu = _image[u];
          if (_s.has_edge(u, v) != _s.has_edge(fu, w)
              || _s.has_edge(v, u) != _s.has_edge(w, fu)) {
            return false;
          }
        }
        return true;
      }

      void extend(std::uint32_t v) {
        if (v == _s.size()) {
          if (_found.size() >= max_group_order) {
            throw guard_error("more than " + std::to_string(max_group_order)
                              + " automorphisms");
          }
          _found.push_back(_image);
          return;
        }
        for (std::uint32_t w = 0; w < _s.size(); ++w) {
          if (!_used[w] && consistent(v, w)) {
            _used[w]  = true;
            _image[v] = w;
            extend(v + 1);
            _used[w] = false;
          }
        }
      }

      MarkedDigraph const&     _s;
      Permutation              _image;
      std::vector<bool>        _used;
      std::vector<Permutation> _found;
    };
  }  // namespace

  GroupTable automorphism_group(MarkedDigraph const& s) {
    if (s.size() > max_structure_size) {
      throw guard_error("structure has " + std::to_string(s.size())
                        + " vertices, more than "
                        + std::to_string(max_structure_size));
    }
    return GroupTable(AutSearch(s).run());
  }

  std::map<std::uint64_t, std::uint64_t>
  homocyclic_order_profile(std::uint64_t p, unsigned n, unsigned k) {
    std::uint64_t const q     = arith::ipow(p, n);
    std::uint64_t const total = arith::ipow(q, k);
    if (total > max_group_order) {
      throw guard_error("reference model too large");
    }
    std::map<std::uint64_t, std::uint64_t> out;
    std::vector<std::uint64_t>             tuple(k, 0);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t rest = idx;
      for (auto& x : tuple) {
        x = rest % q;
        rest /= q;
      }
      // order of a tuple = lcm of coordinate orders q / gcd(x, q)
      std::uint64_t ord = 1;
      for (auto x : tuple) {
        ord = std::lcm(ord, q / std::gcd(x, q));
      }
      ++out[ord];
    }
    return out;
  }

  bool verify_iso_to_direct_sum(GroupTable const& t, std::uint64_t p,
                                unsigned n, unsigned k) {
    std::uint64_t expected;
    try {
      expected = arith::ipow(arith::ipow(p, n), k);
    } catch (std::overflow_error const&) {
      return false;
    }
    if (t.order() != expected || !t.is_abelian()) {
      return false;
    }
    return t.order_profile() == homocyclic_order_profile(p, n, k);
  }

}  // namespace gpc::aut
