#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace tl3d {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar.  Kept canonical by the backing type: reduced to
// lowest terms, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& n);

// "2", "-1/2"; the "/den" part is omitted when the denominator is 1.
std::string to_string(const Rational& r);

Rational rational_from_string(const std::string& text);

}  // namespace tl3d
