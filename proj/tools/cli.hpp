#ifndef DOCCLEAN_TOOLS_CLI_HPP
#define DOCCLEAN_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace docclean::cli {

enum ExitCode : int {
    kSuccess = 0,
    kIoError = 1,     // unreadable/unwritable file, malformed PGM, mismatched inputs
    kParamError = 2,  // bad flag value or command line
};

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace docclean::cli

#endif // DOCCLEAN_TOOLS_CLI_HPP
