#include "comb/numeric.hpp"

#include <cctype>

#include "comb/error.hpp"

namespace comb {

std::string to_string(const Integer& value) { return value.str(); }

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  if (i == text.size()) fail(ErrorKind::Syntax, "malformed integer '" + std::string(text) + "'");
  Integer value = 0;
  for (; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
      fail(ErrorKind::Syntax, "malformed integer '" + std::string(text) + "'");
    }
    value = value * 10 + (text[i] - '0');
  }
  return negative ? Integer(-value) : value;
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den <= 0) fail(ErrorKind::Syntax, "rational '" + std::string(text) + "' needs a positive denominator");
  return Rational(num, den);
}

std::string numerator_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str();
}

std::string denominator_string(const Rational& r) {
  return boost::multiprecision::denominator(r).str();
}

std::string to_string(const Rational& r) {
  auto den = denominator_string(r);
  if (den == "1") return numerator_string(r);
  return numerator_string(r) + "/" + den;
}

}  // namespace comb
