#pragma once

#include "frobtool/polynomial.hpp"

#include <string_view>

namespace frob {

/// Parses a polynomial expression over `ring`.
///
/// Grammar (whitespace insignificant):
///
///     expr   := ['+' | '-'] term { ('+' | '-') term }
///     term   := factor { '*' factor }
///     factor := atom [ '^' integer ]
///     atom   := integer | name | '(' expr ')'
///     name   := [A-Za-z][A-Za-z0-9_]*
///
/// Integer literals of any length are reduced modulo the characteristic.
/// Throws ParseError with a 1-based line/column on malformed input and on
/// names that are not ring variables.
Polynomial parse_polynomial(std::string_view src, const Ring& ring);

}  // namespace frob
