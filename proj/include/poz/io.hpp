#pragma once

#include <string>
#include <string_view>

#include "poz/polynomial.hpp"
#include "poz/report.hpp"

namespace poz {

/// Parses polynomial text.
///
/// Grammar (whitespace and newlines are insignificant):
///
///     expr    := term (('+' | '-') term)*
///     term    := unary (('*' unary) | ('/' integer))*
///     unary   := ('-' | '+') unary | power
///     power   := primary ('^' integer)?
///     primary := integer | variable | '(' expr ')'
///     variable:= 'z[' i ']' | 'z[' a ',' i ']' | 'xi[' i ']' | 't[' i ']'
///
/// Division is scalar only: its right operand must be a nonzero integer
/// literal. Juxtaposition is rejected. Errors carry line and column.
Polynomial parse(std::string_view text);

/// Canonical rendering: terms in descending grlex order, rational
/// coefficients as p/q, e.g. "2/27*z[1]^3 - 1/9*z[1]^2*z[2] + z[3]".
std::string to_string(const Polynomial& p);
std::string to_string(const Rational& r);

/// {"num": "...", "den": "..."}
Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// Canonical text plus term count and a stable digest; the text is omitted
/// above `max_terms` terms.
Json polynomial_json(const Polynomial& p, std::size_t max_terms = 400);

/// 64-bit FNV-1a digest rendered as 16 hex digits.
std::string digest(std::string_view bytes);

} // namespace poz
