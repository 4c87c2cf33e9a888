#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace scensched {

// Exact arbitrary-precision rational. Reductions and expectations never touch
// floating point, so every identity in this library is checked with ==.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Always "num/den", den > 0, lowest terms; zero is "0/1".
std::string format_rational(const Rational& q);

// Accepts "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

inline Rational make_rational(long long num, long long den = 1) {
  return Rational(BigInt(num), BigInt(den));
}

}  // namespace scensched
