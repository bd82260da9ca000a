#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace semimetric {

using Rational = mpq_class;

/// Parses "num" or "num/den" (optional leading '-', den > 0, lowest terms).
/// Throws Error{ParseError} on anything else.
Rational parse_rational(std::string_view text);

/// Canonical text form, the inverse of parse_rational.
std::string to_string(const Rational& value);

}  // namespace semimetric
