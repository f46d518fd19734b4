#include "qgr/numeric.hpp"

#include <cctype>

#include "qgr/error.hpp"

namespace qgr {

namespace {

Integer parse_integer(std::string_view s, std::string_view whole) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
  if (i == s.size()) throw ValidationError("bad number '" + std::string(whole) + "'");
  Integer v = 0;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ValidationError("bad number '" + std::string(whole) + "'");
    v = v * 10 + (s[i] - '0');
  }
  return neg ? Integer(-v) : v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  Integer num = parse_integer(text.substr(0, slash), text);
  Integer den = parse_integer(text.substr(slash + 1), text);
  if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace qgr
