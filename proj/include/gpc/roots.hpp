#ifndef GPC_ROOTS_HPP_
#define GPC_ROOTS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gpc/words.hpp"

namespace gpc {

  // Evidence that an element has no n-th root for any n >= 2, obtained by
  // retracting onto a subgroup where the image visibly has no roots.
  struct RootCertificate {
    int          pattern;  // 1 or 2
    GroupElement element;  // g*
    VertexSet    projection_set;
    GroupElement projected_image;
    // Pattern 2 only: 1 if g retracts to the identity, 2 if it retracts into
    // <a>.
    std::optional<int> projection_case;
    // Pattern 2, case 2: exponent of a in the retraction of g a^-1 (may be
    // zero, e.g. g = a with a of order 2).
    std::optional<std::int64_t>              alpha;
    std::vector<std::pair<std::string, bool>> hypotheses;
    std::string conclusion = "no n-th root for every n >= 2";
  };

  // g* = g a1^-1 a2 b1^-1 b2 with A = {a2, b2}. Requires a1, a2, b1, b2
  // distinct, outside sp(g), a1 not adjacent to b1 and a2 not adjacent to
  // b2; throws hypothesis_error naming the first that fails.
  RootCertificate pattern1_no_root(GroupElement const& g, VertexId a1,
                                   VertexId a2, VertexId b1, VertexId b2);

  // g* = g a^-1 b1^-1 b2 a b3^-1 b4 with A = {a, b1, b2, b3, b4}. Requires
  // the five vertices distinct, a adjacent to none of the b_i, and no b_i in
  // sp(g); a may lie in sp(g).
  RootCertificate pattern2_no_root(GroupElement const& g, VertexId a,
                                   VertexId b1, VertexId b2, VertexId b3,
                                   VertexId b4);

  struct RootSearchOptions {
    std::size_t max_len = 12;
    // Bound on |exponent| for infinite-order generators; by default
    // max(4, n * largest |exponent| of an infinite-order syllable of h).
    std::optional<std::int64_t> infinite_exponent_bound;
  };

  struct RootSearchResult {
    std::optional<GroupElement> root;  // first in (length, lex) order
    std::uint64_t               candidates_visited = 0;
    std::uint64_t               candidates_powered = 0;
    std::int64_t                infinite_exponent_bound = 0;
  };

  // Enumerates canonical words x with at most max_len syllables in
  // (length, lexicographic) order and returns the first with x^n = h.
  // Absence only means no root within the bounds. Throws precondition_error
  // for n < 2.
  RootSearchResult brute_force_root_search(GroupElement const&      h,
                                           std::int64_t             n,
                                           RootSearchOptions const& opts = {});

}  // namespace gpc

#endif  // GPC_ROOTS_HPP_
