#ifndef GPC_STRUCTURE_HPP_
#define GPC_STRUCTURE_HPP_

#include <array>
#include <cstdint>
#include <set>
#include <string>

#include "gpc/words.hpp"

namespace gpc {

  // Generators occurring in (any) normal form of g.
  VertexSet support(GroupElement const& g);

  // Possible first syllables, possible last syllables, and the inverses of
  // the latter, taken over all normal forms of a non-trivial element.
  struct EndsData {
    std::set<Syllable> first;
    std::set<Syllable> last;
    std::set<Syllable> last_inverse;
  };

  // Throws precondition_error on the identity.
  EndsData ends(GroupElement const& g);

  // True for one-syllable elements; otherwise true iff no normal form of g
  // starts and ends with the same generator. Throws precondition_error on
  // the identity.
  bool is_cyclically_normal(GroupElement const& g);

  // g = w1 w2 w3 w2' w1^-1 where the concatenation is a normal form,
  // w3 w2' w2 is cyclically normal, w2 and w2' have equal support spanning a
  // complete subgraph, and no first syllable of w2 inverts a last syllable of
  // w2'.
  struct BarkDecomp {
    GroupElement w1;
    GroupElement w2;
    GroupElement w3;
    GroupElement w2prime;
  };

  struct ConditionCheck {
    bool        passed = false;
    std::string detail;
  };

  struct DecompositionCheck {
    // conditions[i] is condition (i + 1)
    std::array<ConditionCheck, 5> conditions;

    bool ok() const noexcept {
      for (auto const& c : conditions) {
        if (!c.passed) {
          return false;
        }
      }
      return true;
    }
  };

  // Deterministic: generators are processed in vertex order. Throws
  // internal_error if the result fails verify_decomposition.
  BarkDecomp barkauskas_decompose(GroupElement const& g);

  DecompositionCheck verify_decomposition(GroupElement const& g,
                                          BarkDecomp const&   d);

  // Smallest prime exceeding every finite colour order of the graph.
  std::uint64_t least_valid_prime(ColoredGraph const& graph);

  // Throws precondition_error unless p is prime and exceeds every finite
  // colour order of the graph.
  void require_valid_prime(ColoredGraph const& graph, std::uint64_t p);

  enum class PowerCase {
    identity,        // g = e
    clique,          // w3 = e, or sp(w3) a clique: exponents scaled by p
    single_syllable, // w2 = e, w3 one syllable
    repetition,      // w2 = e, w3 longer: w1 w3^p w1^-1
    conjugated,      // w2, w3 both non-trivial: w1 w2 (w3 w2' w2)^(p-1) w3 w2' w1^-1
  };

  std::string to_string(PowerCase c);

  struct PowerDerivation {
    PowerCase    which;
    Word         spelled;  // the word assembled from the decomposition
    GroupElement value;    // canonical form of spelled
  };

  // g^p assembled from the decomposition of g by the case analysis above.
  PowerDerivation power_via_decomposition(GroupElement const& g,
                                          std::uint64_t       p);

  // support(g) ⊆ support(g^p). A false return contradicts the power-support
  // law and must be reported as a falsification.
  bool power_support_check(GroupElement const& g, std::uint64_t p);

}  // namespace gpc

#endif  // GPC_STRUCTURE_HPP_
