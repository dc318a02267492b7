#pragma once

#include <ostream>

namespace torhyp::cli {

/// Runs one command line. JSON/CSV goes to `out`, structured errors to `err`.
/// Returns 0 on success, 1 on invalid input, 2 on an internal inconsistency.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace torhyp::cli
