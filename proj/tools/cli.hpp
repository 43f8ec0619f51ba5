#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddzeta::cli {

// Exit codes: 0 report written, 2 bad configuration, 3 precision cap reached.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitPrecision = 3;

inline constexpr int kDefaultDigits = 50;
inline constexpr int kMinDigits = 16;
inline constexpr int kMaxDigits = 10000;
inline constexpr const char* kDigitsEnv = "ODDZETA_DIGITS";

/// @p args excludes the program name. The report goes to @p out, diagnostics to @p err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddzeta::cli
