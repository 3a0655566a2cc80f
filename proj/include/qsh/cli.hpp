#ifndef QSH_CLI_HPP
#define QSH_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace qsh
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 1;
inline constexpr int exit_verification_failed = 2;

inline constexpr int cli_degree_cap = 10;

// Runs the command line tool on args (without the program name). Results go
// to out, diagnostics to err. Returns 0 on success, 1 on malformed input and
// 2 when a verification fails.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qsh

#endif
