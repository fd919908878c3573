#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace fuzzcomp {

/// Exact rational arithmetic; every degree, tolerance and ratio in the
/// workbench lives here so that comparisons are never subject to rounding.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Canonical "p/q" rendering ("p" alone when q == 1). cpp_rational keeps
/// values normalized, so equal rationals always print identically.
std::string to_fraction_string(const Rational& r);

/// Parses "p/q", "p", or a leading-minus variant. Throws SchemaError on
/// anything else (including "p/0").
Rational parse_fraction(const std::string& text);

}  // namespace fuzzcomp
