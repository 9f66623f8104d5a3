#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace holodisc {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. Everything in the structural layer is computed
/// with these; floating point enters only in the numerical probe.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p/q", an integer, or a finite decimal ("-2.5" -> -5/2), exactly.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// Renders as "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

} // namespace holodisc
