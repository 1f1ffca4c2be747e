// The `tropmono` command line. Every command writes one JSON document to
// `out`; the return value is the process exit code (0 success, 1 invalid
// input, 2 failed self-check).

#ifndef TROPMONO_TOOLS_CLI_HPP_
#define TROPMONO_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace tropmono::cli {

  // `args` excludes the program name.
  int run(std::vector<std::string> const& args, std::ostream& out);

}  // namespace tropmono::cli

#endif  // TROPMONO_TOOLS_CLI_HPP_
