#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace limitstab {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p", "p/q" (q != 0). Surrounding blanks are ignored.
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

/// Lowest terms, "p/q", or "p" when the denominator is 1. Never decimal.
std::string format_rational(const Rational& q);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_integer(const Rational& q);
int sign_of(const Rational& q);

}  // namespace limitstab
