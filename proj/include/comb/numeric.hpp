#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace comb {

using Integer = boost::multiprecision::cpp_int;

// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Integer& value);

// Accepts "p", "-p" or "p/q" with q > 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

std::string numerator_string(const Rational& r);
std::string denominator_string(const Rational& r);
std::string to_string(const Rational& r);

}  // namespace comb
