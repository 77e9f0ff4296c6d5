// Command-line front end: verify, counts, cost, compare and tables.
#pragma once

#include <ostream>

namespace radixbench::cli {

/// Exit codes: 0 ok, 1 verification or reproduction mismatch, 2 usage error.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace radixbench::cli
