#pragma once
#include <string>
#include <vector>

#include "skewcliff/bipoly.hpp"
#include "skewcliff/freealg.hpp"

namespace skewcliff {

// Expression grammar shared by manifests and the CLI:
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' uint]
//   atom   := '(' expr ')' | integer | generator | 'q'
// '*' is mandatory between factors, '^' takes a nonnegative integer, '/'
// requires a nonzero scalar divisor, and 'q' is available only over the
// function field.
NCPoly parse_ncpoly(const std::string& text, const std::vector<std::string>& names,
                    bool function_field);

// Same grammar with the fixed commuting variables a, b.
BiPoly parse_bipoly(const std::string& text, bool function_field);

// Constant expressions (mu entries, q specializations).
Scalar parse_scalar(const std::string& text, bool function_field);

} // namespace skewcliff
