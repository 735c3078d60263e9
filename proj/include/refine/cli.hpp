#pragma once

#include <iosfwd>

namespace refine {

/// Entry point of the `ltsrefine` tool. Exit codes: 0 holds / satisfied,
/// 1 refuted / violated, 2 usage, parse or semantic error.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace refine
