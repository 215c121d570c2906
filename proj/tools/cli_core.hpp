#pragma once

#include <string>
#include <vector>

namespace guinand::cli {

// Exit codes: 0 all gated checks pass, 1 configuration/convergence error,
// 2 at least one gated check failed.
inline constexpr int kExitPass = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitCheckFailed = 2;

int run(const std::vector<std::string>& args);
int run(int argc, const char* const* argv);

}  // namespace guinand::cli
