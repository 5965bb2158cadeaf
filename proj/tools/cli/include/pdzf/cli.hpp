#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pdzf::cli {

/// Runs one command line (without the program name). JSON results go to
/// `out`, diagnostics to `err`. Graphs are read from `in` unless --graph
/// names a file.
///
/// Returns 0 on success, 1 for an internal defect (including a violated
/// bound or a rejected `check` witness), 2 for invalid input, 3 when a size
/// guard or enumeration cap is exceeded.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace pdzf::cli
