#pragma once

// Arithmetic-expression literals.
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary | unary)*     juxtaposition multiplies: 2i, 3z
//   unary   := ('+'|'-') unary | power
//   power   := atom ['^' integer]
//   atom    := number | identifier | '(' expr ')'
//
// Numbers are integers, or decimals over Q (exact) and C (rounded). The
// identifier `t` denotes the generator of an extension field, `i` the
// imaginary unit of C, and the caller-chosen variable the indeterminate.
// Division is only by nonzero constants.

#include <string>
#include <string_view>
#include <vector>

#include "tmrat/field.hpp"

namespace tmrat {

/// Coefficients, low degree first with trailing zeros removed, of a polynomial
/// expression in `variable` (pass '\0' to forbid an indeterminate).
std::vector<Element> parse_polynomial(std::string_view text, const Field& field, char variable);

/// Splits on `sep` outside parentheses and brackets; pieces are whitespace-trimmed.
std::vector<std::string_view> split_top_level(std::string_view text, char sep);

std::string_view trim(std::string_view text);

}  // namespace tmrat
