#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmlde {

// Runs the command-line front end on the given argument list (without the
// program name). Results go to `out`, diagnostics to `err`. Returns the
// process exit code: 0 ok, 1 verification failed, 2 usage error.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qmlde
