#ifndef FILTINT_CLI_HPP
#define FILTINT_CLI_HPP

#include <iosfwd>

namespace filtint {

/// Full command-line surface. Exit codes: 0 success, 1 verification
/// mismatch, 2 argument errors (usage goes to err). Data goes to out,
/// diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace filtint

#endif
