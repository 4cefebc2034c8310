#ifndef GPC_ERRORS_HPP_
#define GPC_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace gpc {

  // Malformed input text (graph files, spec files, inline words).
  class parse_error : public std::runtime_error {
   public:
    parse_error(std::size_t line, std::string const& msg)
        : std::runtime_error(line == 0 ? msg
                                       : "line " + std::to_string(line) + ": "
                                             + msg),
          _line(line) {}

    // 0 when the input has no line structure (inline words)
    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  // An operation was called outside its domain (bad prime, identity where a
  // non-trivial element is required, malformed spec, ...).
  class precondition_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Two elements from different ambient graphs were combined.
  class graph_mismatch : public std::invalid_argument {
   public:
    graph_mismatch()
        : std::invalid_argument("elements belong to different graphs") {}
  };

  // A named hypothesis of a root obstruction does not hold.
  class hypothesis_error : public std::invalid_argument {
   public:
    explicit hypothesis_error(std::string hypothesis)
        : std::invalid_argument("hypothesis fails: " + hypothesis),
          _hypothesis(std::move(hypothesis)) {}

    std::string const& hypothesis() const noexcept {
      return _hypothesis;
    }

   private:
    std::string _hypothesis;
  };

  // Enumeration bounds exceeded. Never silently truncated.
  class guard_error : public std::length_error {
   public:
    using std::length_error::length_error;
  };

  // A self-check failed; indicates a bug in this library, not bad input.
  class internal_error : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace gpc

#endif  // GPC_ERRORS_HPP_
