#pragma once

#include <string>
#include <vector>

namespace dqc {

/// Runs the command-line front end (args excludes the program name).
/// Returns the process exit code. Output goes to stdout/stderr unless an
/// --output path is given.
int run_cli(const std::vector<std::string>& args);

}  // namespace dqc
