#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclolab/int_polynomial.hpp"
#include "cyclolab/mod_polynomial.hpp"

namespace cyclolab::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDomainError = 2,
  kVerificationFailure = 3,
};

/// Runs one subcommand. args excludes the program name. The result goes to
/// out only once it is complete; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Degree-descending with explicit signs, e.g. "X^4 - X^2 + 1".
std::string format_polynomial(const IntPolynomial& p);
/// Residues printed as non-negative integers, e.g. "X^3 + X + 1".
std::string format_polynomial(const ModPolynomial& p);

}  // namespace cyclolab::cli
