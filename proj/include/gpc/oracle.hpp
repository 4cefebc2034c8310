#ifndef GPC_ORACLE_HPP_
#define GPC_ORACLE_HPP_

#include <cstdint>
#include <set>
#include <vector>

#include "gpc/presentation.hpp"
#include "gpc/words.hpp"

// Brute-force ground truth for the word calculus. Nothing here calls
// reduce() or canonical_word(); merges and swaps are re-implemented naively.
namespace gpc::oracle {

  inline constexpr std::size_t max_word_syllables = 10;
  inline constexpr std::size_t max_ball_radius    = 8;
  inline constexpr std::size_t max_ball_vertices  = 5;

  // Every word reachable from w by adjacent-commuting transpositions.
  // Throws guard_error past max_word_syllables.
  std::set<Word> shuffle_closure(ColoredGraph const& g, Word const& w);

  // All words reachable from w by merge steps (equal generators p < q with
  // the generator adjacent to everything strictly between) applied in every
  // possible order, that admit no further merge.
  std::set<Word> exhaustive_reduce(ColoredGraph const& g, Word const& w);

  // Some reduced form of w1 and some reduced form of w2 are shuffle
  // equivalent.
  bool oracle_equal(ColoredGraph const& g, Word const& w1, Word const& w2);

  // Least member of the shuffle closure of the least exhaustive reduction;
  // equal keys <=> oracle_equal once reduction is confluent.
  Word oracle_key(ColoredGraph const& g, Word const& w);

  // Distinct elements spelled by words of at most `radius` syllables, with
  // exponents 1..q-1 for order q and 1 <= |e| <= infinite_exponent_bound
  // otherwise. Each element is returned as its oracle_key. Throws
  // guard_error past max_ball_radius or max_ball_vertices.
  std::vector<Word> enumerate_ball(ColoredGraph const& g, std::size_t radius,
                                   std::int64_t infinite_exponent_bound = 2);

}  // namespace gpc::oracle

#endif  // GPC_ORACLE_HPP_
