#pragma once

#include <string_view>

namespace gie {

/// Evaluates a small arithmetic expression: numbers, + - * /, parentheses
/// and sqrt(...), e.g. "(sqrt(97)+1)/8". Throws InvalidInput on bad syntax.
double parse_expr(std::string_view text);

}  // namespace gie
