#ifndef ORELIM_CLI_HPP
#define ORELIM_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace orelim {

// Exit codes: 0 success / all-pass, 1 verification failure or nonzero
// residual, 2 usage or parse error, 3 mathematical precondition failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace orelim

#endif
