#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "singspec/polynomial.hpp"

namespace singspec {

/// Parses a polynomial over the given ordered variables.
///
/// Grammar: integers, rationals `a/b`, identifiers, `+ - * ^` and
/// parentheses. `^` binds tighter than `*`, which binds tighter than `+`
/// and `-`. Exponents are nonnegative integer literals. Juxtaposition
/// ("2x", "x y") is rejected; "xy" is a single identifier.
///
/// Throws SyntaxError (with byte offset) or UnknownVariable.
Polynomial parse_polynomial(std::string_view text, const Variables& vars);
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

/// Splits "x,y,z" into identifiers, validating each.
std::vector<std::string> parse_variable_list(std::string_view text);

}  // namespace singspec
