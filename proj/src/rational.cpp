#include "firebreak/rational.hpp"

#include <charconv>

namespace firebreak {

double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace {

BigInt parse_big_int(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (i == text.size()) throw std::invalid_argument("sign without digits");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (text[k] < '0' || text[k] > '9')
      throw std::invalid_argument("invalid digit in integer literal: " + std::string(text));
  }
  return BigInt(std::string(text));
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_big_int(text));
  BigInt p = parse_big_int(text.substr(0, slash));
  BigInt q = parse_big_int(text.substr(slash + 1));
  if (q <= 0) throw std::invalid_argument("fraction denominator must be positive: " + std::string(text));
  return Rational(p, q);
}

std::string fraction_string(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += '/';
    s += denominator(q).str();
  }
  return s;
}

}  // namespace firebreak
