#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace torusq::cli {

enum ExitCode : int { kSuccess = 0, kInputError = 2, kPreconditionViolation = 3, kToleranceFailure = 4 };

/// Runs torus-quant with `args` (program name excluded). Data goes to --out or
/// `out`; diagnostics and errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torusq::cli
