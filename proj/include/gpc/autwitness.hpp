#ifndef GPC_AUTWITNESS_HPP_
#define GPC_AUTWITNESS_HPP_

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace gpc::aut {

  // A finite directed graph with a unary mark on every vertex. Edges join
  // vertices of equal mark.
  class MarkedDigraph {
   public:
    MarkedDigraph(std::size_t                                     vertex_count,
                  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges,
                  std::vector<std::uint32_t>                      marks);

    std::size_t size() const noexcept {
      return _n;
    }
    bool has_edge(std::uint32_t u, std::uint32_t v) const noexcept {
      return _adj[u * _n + v] != 0;
    }
    std::uint32_t mark(std::uint32_t v) const {
      return _marks.at(v);
    }
    std::vector<std::pair<std::uint32_t, std::uint32_t>> const&
    edges() const noexcept {
      return _edges;
    }

    // Same vertices and edges, every vertex carrying mark 0.
    MarkedDigraph unmarked() const;

   private:
    std::size_t                                          _n;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> _edges;
    std::vector<std::uint32_t>                           _marks;
    std::vector<char>                                    _adj;
  };

  using Permutation = std::vector<std::uint32_t>;

  Permutation compose(Permutation const& first, Permutation const& then);

  // A finite permutation group listed element by element.
  class GroupTable {
   public:
    // Throws precondition_error unless the elements are distinct
    // permutations of one degree, contain the identity, and are closed under
    // composition and inverse.
    explicit GroupTable(std::vector<Permutation> elements);

    // Closure of the generators; throws guard_error past max_order elements.
    static GroupTable generated_by(std::size_t                     degree,
                                   std::vector<Permutation> const& gens,
                                   std::size_t max_order = 1u << 16);

    std::size_t order() const noexcept {
      return _elements.size();
    }
    std::vector<Permutation> const& elements() const noexcept {
      return _elements;
    }

    bool is_abelian() const;

    static std::uint64_t element_order(Permutation const& p);

    // element order -> number of elements of that order
    std::map<std::uint64_t, std::uint64_t> order_profile() const;

   private:
    std::vector<Permutation> _elements;  // sorted
  };

  inline constexpr std::size_t max_structure_size = 64;
  inline constexpr std::size_t max_group_order    = 1u << 16;

  // k disjoint directed cycles of length p^n, the i-th marked i. Throws
  // precondition_error unless p is prime, n >= 1, k >= 1, and guard_error if
  // p^n * k exceeds max_structure_size.
  MarkedDigraph build_witness_structure(std::uint64_t p, unsigned n,
                                        unsigned k);

  // All mark-preserving bijections that preserve edges and non-edges, by
  // backtracking. Throws guard_error past max_structure_size vertices or
  // max_group_order automorphisms.
  GroupTable automorphism_group(MarkedDigraph const& s);

  // Element-order counts of (Z_{p^n})^k, by enumerating integer tuples.
  std::map<std::uint64_t, std::uint64_t>
  homocyclic_order_profile(std::uint64_t p, unsigned n, unsigned k);

  // |t| = p^(nk), t abelian, and t has the element-order profile of
  // (Z_{p^n})^k.
  bool verify_iso_to_direct_sum(GroupTable const& t, std::uint64_t p,
                                unsigned n, unsigned k);

}  // namespace gpc::aut

#endif  // GPC_AUTWITNESS_HPP_
