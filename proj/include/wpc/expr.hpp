#ifndef WPC_EXPR_HPP
#define WPC_EXPR_HPP

#include <string>
#include <vector>

#include "wpc/lgroup.hpp"

namespace wpc {

// Group element expressions:
//   expr := term (("+" | "-") term)*
//   term := [int ["*"]] ("x" index | "c")  |  "0"
// Whitespace-insensitive; a leading sign is allowed; indices are 1-based.
// "0" (and only 0) may stand alone as the zero element. Coefficients are
// capped at |a| <= 10^12 to keep coordinates inside int64.
// Examples: "x1-2*x3", "2*c-2*c", "0".
LElement parse_element(const WeightType& p, const std::string& text);

// Inverse of parse_element up to normal form: the printed expression
// re-parses to the identical element. Zero prints as "0".
std::string format_element(const WeightType& p, const LElement& x);

// "2,3,4" -> weights; the empty string denotes the empty weight sequence.
WeightType parse_weights(const std::string& text);

} // namespace wpc

#endif
