#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pwb::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kRejected = 2,       ///< certificate rejected, or a verification check failed
    kInconclusive = 3,
    kBadInput = 64,      ///< malformed polynomial file or command line
    kNumerical = 65,     ///< root finder did not converge
};

/// Runs the command line `args` (args[0] is the program name). Documents go
/// to `out` unless --out names a file, which is then replaced atomically;
/// diagnostics go to `err`. Standard input is read when no input file is
/// given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace pwb::cli
