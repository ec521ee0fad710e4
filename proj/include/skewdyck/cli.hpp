#ifndef SKEWDYCK_CLI_HPP
#define SKEWDYCK_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace skewdyck {
namespace cli {

// Dispatches one invocation. `args` excludes the program name. Returns 0 on
// success, 1 when a verification or comparison fails, 2 on usage or
// environment errors. Results go to `out` (JSON by default, CSV or plain
// text via --format), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cli
}  // namespace skewdyck

#endif
