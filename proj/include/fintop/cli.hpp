#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fintop {

/// Runs the command-line front end on the given arguments (program name not
/// included). All normal output goes to out, diagnostics to err. Returns the
/// process exit code:
///   0  success (for `oracle`: a witness exists)
///   1  a check or verification failed, or `oracle` found no witness
///   2  bad input: malformed files, violated axioms, bad flags, caps
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fintop
