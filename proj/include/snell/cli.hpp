#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace snell {

// Dispatch a full command line (program name excluded). Diagnostics go to
// err, data and summaries to out or to files named by flags. Returns the
// process exit code: 0 success, 1 domain or scene errors, 2 usage errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace snell
