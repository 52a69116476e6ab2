#ifndef PHYSKIT_CLI_HPP
#define PHYSKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace physkit::cli {

// Command dispatch used by the physkit binary and by the tests.
// Exit codes: 0 all pass, 1 demo failures, 2 usage error, 3 I/O error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace physkit::cli

#endif
