#pragma once

#include <string_view>

#include "nf/bipoly.hpp"

namespace nf {

/// Parses a polynomial in the two variables named by `names`.
///
/// Grammar: rational literals (`3`, `3/2`), the two variables, binary
/// `+ - *`, unary minus, parentheses and `^` with a nonnegative integer
/// literal exponent. `^` binds tightest, then `*`, then `+ -`. There is no
/// implicit multiplication (`2x` is rejected). Whitespace is ignored.
///
/// Throws nf::ParseError carrying the 1-based column of the offending token.
BiPoly parse_polynomial(std::string_view text, const VarNames& names = {});

}  // namespace nf
