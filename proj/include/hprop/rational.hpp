#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace hprop {

using Rational = boost::multiprecision::mpq_rational;
using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<std::vector<Rational>>;

/// Parses a decimal string ("0.3", "-1.25e-2", "7") into an exact rational.
/// Throws Error(ParseError) on malformed input.
Rational rational_from_decimal(std::string_view text);

/// Interprets a double through its shortest round-trip decimal representation,
/// so that e.g. the double closest to 0.3 becomes exactly 3/10.
Rational rational_from_double(double x);

/// "p/q" (or just "p" for integers).
std::string to_fraction_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace hprop
