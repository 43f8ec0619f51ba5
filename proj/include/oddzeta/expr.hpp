#pragma once

// Constant expressions for the command line: pi, zetaN (N >= 2), integers,
// parentheses, * and /, and integer powers, e.g. "zeta3/pi^2" or "pi^5/zeta5".

#include "oddzeta/hreal.hpp"

#include <string>

namespace oddzeta {

/// Throws std::invalid_argument on a malformed expression.
HReal evaluate_expr(const std::string& text, Bits bits);

}  // namespace oddzeta
