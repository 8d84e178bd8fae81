#ifndef TRACECODES_CLI_HPP
#define TRACECODES_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tracecodes::cli {

// Exit codes: 0 pass, 1 mismatch/fail, 2 usage error, 3 budget refusal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tracecodes::cli

#endif
