#pragma once

#include <ostream>

#include "qset/error.hpp"

namespace qset::cli {

enum class ExitCode : int {
  Success = 0,
  Usage = 1,          // bad arguments, syntax errors
  IllFormed = 2,      // identity on m-atoms, impure labelling input
  SuiteFailure = 3,   // the axiom battery found counterexamples
  Scale = 4,          // overflow or enumeration bounds
};

ExitCode exit_code_for(ErrorKind kind);

// Entry point shared by the qset binary and the tests. Results go to out,
// diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qset::cli
