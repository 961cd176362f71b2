// Batch front-end. Exit codes: 0 all assertions hold, 1 a mathematical
// assertion failed, 2 usage or input error.
#pragma once

#include <iosfwd>

namespace qpw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAssertion = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qpw::cli
