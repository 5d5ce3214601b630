#pragma once
// Command-line frontend: genus tables, dimension verification, certificate
// emission and the self-check property suites.

#include <iosfwd>
#include <string>

namespace hirz {

// Exit codes: 0 success/match, 1 verification mismatch, 2 usage error,
// 3 internal inconsistency.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace hirz
