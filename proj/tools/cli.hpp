#pragma once

// Batch command-line front end: model selection, check orchestration,
// line-delimited JSON reports, golden-file friendly derivation dumps.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage/config error.

#include <iosfwd>

namespace chopf::cli {

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chopf::cli
