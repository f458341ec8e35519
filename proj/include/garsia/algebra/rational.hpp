#pragma once

// Arbitrary-precision integers and rationals (GMP), plus the handful of
// conversions the rest of the library needs.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace garsia {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Integer pow(const Integer& base, unsigned long exponent) {
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

inline Rational pow(const Rational& base, unsigned long exponent) {
  Rational result(pow(Integer(base.get_num()), exponent), pow(Integer(base.get_den()), exponent));
  result.canonicalize();
  return result;
}

inline Integer pow2(unsigned long exponent) {
  Integer result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
  return result;
}

inline int sign(const Integer& z) { return sgn(z); }
inline int sign(const Rational& q) { return sgn(q); }

/// Parses "3", "-3/2", "1.85", "+0.5", ".25" or "2e-3" into an exact rational.
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (c != ' ' && c != '_') s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty number");

  if (auto slash = s.find('/'); slash != std::string::npos) {
    Integer num, den;
    if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
      throw ParseError("malformed fraction '" + s + "'");
    if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
  }

  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    try {
      std::size_t used = 0;
      exp10 = std::stol(s.substr(e + 1), &used);
      if (used != s.size() - e - 1) throw ParseError("malformed exponent in '" + s + "'");
    } catch (const std::logic_error&) {
      throw ParseError("malformed exponent in '" + s + "'");
    }
    s.resize(e);
  }

  bool negative = false;
  std::size_t pos = 0;
  if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
    negative = s[pos] == '-';
    ++pos;
  }
  std::string digits;
  long frac_digits = 0;
  bool seen_point = false;
  for (; pos < s.size(); ++pos) {
    char c = s[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      if (seen_point) ++frac_digits;
    } else {
      throw ParseError("malformed number '" + std::string(text) + "'");
    }
  }
  if (digits.empty()) throw ParseError("malformed number '" + std::string(text) + "'");

  Integer mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  long shift = exp10 - frac_digits;
  Rational q;
  if (shift >= 0) {
    q = Rational(mantissa * pow(Integer(10), static_cast<unsigned long>(shift)));
  } else {
    q = Rational(mantissa, pow(Integer(10), static_cast<unsigned long>(-shift)));
    q.canonicalize();
  }
  return q;
}

/// "p/q" or "p" in lowest terms.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

enum class Rounding { down, nearest, up };

/// Fixed-point decimal rendering with `digits` places after the point.
inline std::string to_decimal(const Rational& q, int digits, Rounding mode = Rounding::nearest) {
  Integer scale = pow(Integer(10), static_cast<unsigned long>(digits));
  Integer num = q.get_num() * scale;
  Integer den = q.get_den();
  Integer floor_q;
  mpz_fdiv_q(floor_q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer rem = num - floor_q * den;
  Integer value = floor_q;
  if (rem != 0) {
    switch (mode) {
      case Rounding::down:
        break;
      case Rounding::up:
        value += 1;
        break;
      case Rounding::nearest:
        if (2 * rem >= den) value += 1;
        break;
    }
  }
  bool negative = value < 0;
  if (negative) value = -value;
  std::string body = value.get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) - body.size() + 1, '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + body : body;
}

inline double to_double(const Rational& q) { return q.get_d(); }

struct IntegerHash {
  std::size_t operator()(const Integer& z) const noexcept {
    const auto* raw = z.get_mpz_t();
    std::size_t h = static_cast<std::size_t>(raw->_mp_size) * 0x9e3779b97f4a7c15ULL;
    int limbs = raw->_mp_size < 0 ? -raw->_mp_size : raw->_mp_size;
    for (int i = 0; i < limbs; ++i) {
      h ^= static_cast<std::size_t>(raw->_mp_d[i]) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

struct RationalHash {
  std::size_t operator()(const Rational& q) const noexcept {
    IntegerHash h;
    return h(q.get_num()) * 31 + h(q.get_den());
  }
};

}  // namespace garsia
