#ifndef GPC_CLI_HPP_
#define GPC_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace gpc::cli {

  // Exit codes: 0 success or positive verdict, 1 domain-level negative
  // (false, rejected hypothesis, non-admitting spec, absent root, ...),
  // 2 usage or parse error.
  inline constexpr int exit_ok       = 0;
  inline constexpr int exit_negative = 1;
  inline constexpr int exit_usage    = 2;

  // Runs one invocation; args excludes the program name. The first line
  // written to out is the machine-readable verdict.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

}  // namespace gpc::cli

#endif  // GPC_CLI_HPP_
