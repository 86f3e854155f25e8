#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace permlat {

using BigInt = boost::multiprecision::cpp_int;
// Always kept in canonical reduced form with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q" with q > 0 after sign normalization.
Rational parse_rational(const std::string& token);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rational_str(const Rational& r);

std::string point_str(const std::vector<Rational>& point);

// floor(a/b) for b > 0.
BigInt floor_div(const BigInt& a, const BigInt& b);

BigInt floor_rational(const Rational& r);
BigInt ceil_rational(const Rational& r);

}  // namespace permlat
