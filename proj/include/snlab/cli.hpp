#pragma once

#include <iosfwd>

namespace snlab {

/// Entry point of the snlab binary. Returns 0 when every check passes, 1 when
/// any fails and 2 for usage, parse or input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace snlab
