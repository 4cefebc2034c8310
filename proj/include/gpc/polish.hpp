#ifndef GPC_POLISH_HPP_
#define GPC_POLISH_HPP_

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "gpc/presentation.hpp"

namespace gpc::polish {

  // A four-point formal cardinal scale:
  //   finite n < aleph0 < uncountable_lt_continuum < continuum.
  class Cardinal {
   public:
    enum class Kind { finite, aleph0, uncountable_lt_continuum, continuum };

    static Cardinal finite(std::uint64_t n) noexcept {
      return Cardinal(Kind::finite, n);
    }
    static Cardinal aleph0() noexcept {
      return Cardinal(Kind::aleph0, 0);
    }
    static Cardinal uncountable_lt_continuum() noexcept {
      return Cardinal(Kind::uncountable_lt_continuum, 0);
    }
    static Cardinal continuum() noexcept {
      return Cardinal(Kind::continuum, 0);
    }

    Kind kind() const noexcept {
      return _kind;
    }
    std::uint64_t finite_value() const noexcept {
      return _n;
    }

    bool is_countable() const noexcept {
      return _kind == Kind::finite || _kind == Kind::aleph0;
    }
    bool is_uncountable() const noexcept {
      return !is_countable();
    }
    bool is_zero() const noexcept {
      return _kind == Kind::finite && _n == 0;
    }

    // Finite sums add (std::overflow_error past 2^64 - 1); otherwise the
    // max.
    Cardinal operator+(Cardinal const& that) const;
    // this * aleph0
    Cardinal times_aleph0() const noexcept;

    std::string to_string() const;
    // "<n>", "aleph0", "uncountable_lt_continuum" or "continuum"
    static std::optional<Cardinal> parse(std::string_view token);

    bool operator==(Cardinal const&) const = default;
    std::strong_ordering operator<=>(Cardinal const& that) const noexcept;

   private:
    Cardinal(Kind k, std::uint64_t n) noexcept : _kind(k), _n(n) {}

    Kind          _kind;
    std::uint64_t _n;
  };

  // Countably many distinct finite colours, each carried by per_color_size
  // vertices of the class.
  struct CountablyManyColors {
    Cardinal per_color_size;

    bool operator==(CountablyManyColors const&) const = default;
  };

  using ColorMode = std::variant<Color, CountablyManyColors>;

  enum class Internal { complete, discrete };
  enum class Link { all, none };

  struct ClassSpec {
    std::string name;
    Cardinal    size;
    ColorMode   color;
    Internal    internal;
  };

  // A colored graph described by finitely many homogeneous vertex classes.
  // Links are all-or-none between classes.
  class SymbolicGraphSpec {
   public:
    SymbolicGraphSpec() = default;

    // Throws precondition_error on duplicate names, a links entry naming a
    // missing class or a class with itself, or a CountablyManyColors class
    // whose size is not per_color_size * aleph0. Unlisted pairs are none.
    SymbolicGraphSpec(std::vector<ClassSpec>                            classes,
                      std::map<std::pair<std::size_t, std::size_t>, Link> links);

    std::vector<ClassSpec> const& classes() const noexcept {
      return _classes;
    }

    Link link(std::size_t i, std::size_t j) const;

    // The spec restricted to the given class indices (kept in order).
    SymbolicGraphSpec restricted(std::vector<std::size_t> const& keep) const;

    std::optional<std::size_t> find(std::string_view name) const;

   private:
    std::vector<ClassSpec>                              _classes;
    std::map<std::pair<std::size_t, std::size_t>, Link> _links;  // i < j
  };

  struct ParsedSpec {
    SymbolicGraphSpec        spec;
    std::vector<std::string> warnings;  // defaulted links
  };

  // Spec file format:
  //   class <name> size <n|aleph0|uncountable_lt_continuum|continuum>
  //         color <integer|inf|many(<size>)> internal <complete|discrete>
  //   link <name> <name> <all|none>
  ParsedSpec  parse_spec(std::string_view text);
  std::string serialize_spec(SymbolicGraphSpec const& spec);

  struct Summand {
    std::uint64_t prime;
    unsigned      exponent;
    Cardinal      multiplicity;

    bool operator==(Summand const&) const = default;
  };

  // G = G1 (+) G2 with G1 the graph product on the countable classes and G2 a
  // direct sum of continuum-dimensional homocyclic summands Z_{p^n}.
  struct DecompositionReport {
    SymbolicGraphSpec    countable_part;
    std::vector<Summand> vector_space_summands;  // sorted by (p, n)
    bool                 realizable_as_automorphism_group = false;
  };

  struct ConditionResult {
    bool        passed = false;
    std::string witness;
  };

  struct PolishVerdict {
    bool admits = false;
    // (a), (b), (c), (d)
    std::array<ConditionResult, 4>     conditions;
    std::optional<DecompositionReport> report;
  };

  PolishVerdict check_conditions(SymbolicGraphSpec const& spec);

  // Throws precondition_error if the spec does not admit a Polish topology.
  DecompositionReport decomposition_report(SymbolicGraphSpec const& spec);

  enum class SpecialTag { raag, racg, general };
  std::string to_string(SpecialTag t);

  struct SpecialClassification {
    SpecialTag    tag;
    PolishVerdict verdict;
  };

  // RAAG: every class Uniform(inf); RACG: every class Uniform(2); an empty
  // spec is general. For an uncountable RAAG condition (c) must fail, and for
  // a RACG the verdict must equal (a) and (d); internal_error otherwise.
  SpecialClassification classify_special(SymbolicGraphSpec const& spec);

}  // namespace gpc::polish

#endif  // GPC_POLISH_HPP_
