#pragma once

#include <iosfwd>

namespace pairion::cli {

// Exit statuses.
inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_numerical = 3;

/// Entry point of the pairion tool; writes results to out unless --output is
/// given, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pairion::cli
