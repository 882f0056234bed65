#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace firebreak {

// Exact arbitrary-precision rational used in "rational" numeric mode.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

double to_double(const Rational& q);
inline double to_double(double v) { return v; }

// Parses "p/q" (q > 0) or a plain integer literal. Throws std::invalid_argument.
Rational parse_fraction(std::string_view text);

// "p/q" in lowest terms, or just "p" when the value is integral.
std::string fraction_string(const Rational& q);

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }
inline bool is_integer(double v) {
  return std::isfinite(v) && v == std::floor(v);
}

// Per-mode numeric glue. T is either double ("float" mode) or Rational
// ("rational" mode); every quantity of one instance uses a single T.
template <class T>
struct num_traits;

template <>
struct num_traits<double> {
  static constexpr bool exact = false;
  static const char* mode_name() { return "float"; }
  static double from_int(long long v) { return static_cast<double>(v); }
  static double from_fraction(long long p, long long q) {
    return static_cast<double>(p) / static_cast<double>(q);
  }
  static long long to_int(double v) {
    if (!is_integer(v)) throw std::invalid_argument("expected an integer value");
    return static_cast<long long>(v);
  }
};

template <>
struct num_traits<Rational> {
  static constexpr bool exact = true;
  static const char* mode_name() { return "rational"; }
  static Rational from_int(long long v) { return Rational(v); }
  static Rational from_fraction(long long p, long long q) { return Rational(p, q); }
  static long long to_int(const Rational& v) {
    if (!is_integer(v)) throw std::invalid_argument("expected an integer value");
    return static_cast<long long>(numerator(v));
  }
};

}  // namespace firebreak
