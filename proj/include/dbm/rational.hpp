#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace dbm {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Largest integer not exceeding r.
Integer floor_of(const Rational& r);
/// Smallest integer not below r, computed as -floor(-r).
Integer ceil_of(const Rational& r);

/// Exact square root when r is the square of a rational, std::nullopt
/// otherwise (including negative r).
std::optional<Rational> exact_sqrt(const Rational& r);

/// Parses "p" or "p/q" with optional leading sign. Throws ParseError on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

/// Canonical text form: "p" for integers, "p/q" otherwise (lowest terms,
/// positive denominator).
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

}  // namespace dbm
