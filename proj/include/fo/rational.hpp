#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace fo {

// Exact rational arithmetic everywhere; values are always kept in lowest terms.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

// Parses "p/q", "-p/q" or an integer literal. Throws ParseError on malformed
// text or a zero denominator.
Rational parse_rational(std::string_view text);

// Lowest-terms serialization: "7/2", "-1/7", "6" (integers carry no "/1").
std::string to_string(const Rational& value);

}  // namespace fo
