#pragma once

#include <iosfwd>

namespace fibsteg::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInputError = 2;
inline constexpr int kCapacityError = 3;

// Environment variable consulted when --seed is absent.
inline constexpr const char* kSeedEnv = "FIBSTEG_SEED";

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fibsteg::cli
