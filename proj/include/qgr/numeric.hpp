#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

namespace qgr {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "7", "-3", "2/5". Throws ValidationError on anything else or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline bool is_integral(const Rational& r) {
  return boost::multiprecision::denominator(r) == 1;
}

}  // namespace qgr
