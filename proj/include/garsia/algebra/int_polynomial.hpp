#pragma once

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "garsia/algebra/interval.hpp"
#include "garsia/algebra/rational.hpp"

namespace garsia {

/// Univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order. The representation is always trimmed,
/// so the leading coefficient is nonzero and the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long c : ascending) coeffs_.emplace_back(c);
    trim();
  }
  explicit IntPolynomial(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

  static IntPolynomial monomial(const Integer& c, std::size_t degree) {
    std::vector<Integer> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
  }
  static IntPolynomial x() { return IntPolynomial{0, 1}; }
  static IntPolynomial constant(const Integer& c) { return IntPolynomial(std::vector<Integer>{c}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  const Integer& leading() const { return coeffs_.back(); }
  Integer operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  Integer eval(const Integer& x) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Rational eval(const Rational& x) const {
    // homogenised: sum c_i num^i den^(d-i), divided by den^d
    if (is_zero()) return Rational(0);
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = 0;
    Integer den_pow = 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * num + *it * den_pow;
      den_pow *= den;
    }
    Rational r(acc, den_pow / den);
    r.canonicalize();
    return r;
  }

  /// Exact sign of p(x) for rational x, without forming the rational value.
  int sign_at(const Rational& x) const {
    if (is_zero()) return 0;
    const Integer& num = x.get_num();
    const Integer& den = x.get_den();
    Integer acc = 0;
    Integer den_pow = 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * num + *it * den_pow;
      den_pow *= den;
    }
    return sgn(acc);
  }

  Interval eval(const Interval& x) const {
    Interval acc(x.precision());
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      acc = acc * x + Interval(Rational(*it), x.precision());
    }
    return acc;
  }

  IntPolynomial derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
  }

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] + b[i];
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Integer> r(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a[i] - b[i];
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator-(const IntPolynomial& a) {
    std::vector<Integer> r(a.coeffs_);
    for (auto& c : r) c = -c;
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return IntPolynomial(std::move(r));
  }
  friend IntPolynomial operator*(const Integer& k, const IntPolynomial& a) {
    std::vector<Integer> r(a.coeffs_);
    for (auto& c : r) c *= k;
    return IntPolynomial(std::move(r));
  }

  /// Multiplication by x^k.
  IntPolynomial shifted(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Integer> r(k);
    r.insert(r.end(), coeffs_.begin(), coeffs_.end());
    return IntPolynomial(std::move(r));
  }

  /// x^deg p(1/x).
  IntPolynomial reversed() const {
    std::vector<Integer> r(coeffs_.rbegin(), coeffs_.rend());
    return IntPolynomial(std::move(r));
  }

  /// p(-x).
  IntPolynomial negated_argument() const {
    std::vector<Integer> r(coeffs_);
    for (std::size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
    return IntPolynomial(std::move(r));
  }

  /// Self-reciprocal up to sign: x^d p(1/x) = +-p(x).
  bool is_reciprocal() const {
    if (is_zero()) return false;
    IntPolynomial r = reversed();
    return r == *this || r == -*this;
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
      if (g == 1) break;
    }
    return g;
  }

  /// Divides out the (positive) content, keeping the sign.
  IntPolynomial content_free() const {
    if (is_zero()) return {};
    Integer g = content();
    std::vector<Integer> r(coeffs_);
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(r));
  }

  /// Divides out the content and makes the leading coefficient positive.
  IntPolynomial primitive() const {
    if (is_zero()) return {};
    Integer g = content();
    if (leading() < 0) g = -g;
    std::vector<Integer> r(coeffs_);
    for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return IntPolynomial(std::move(r));
  }

  /// Quotient when `divisor` divides this polynomial exactly over Z.
  std::optional<IntPolynomial> exact_quotient(const IntPolynomial& divisor) const {
    if (divisor.is_zero()) return std::nullopt;
    if (is_zero()) return IntPolynomial{};
    if (degree() < divisor.degree()) return std::nullopt;
    std::vector<Integer> rem(coeffs_);
    std::vector<Integer> quot(static_cast<std::size_t>(degree() - divisor.degree() + 1));
    const Integer& lc = divisor.leading();
    const auto dd = static_cast<std::size_t>(divisor.degree());
    for (std::size_t k = quot.size(); k-- > 0;) {
      const Integer& top = rem[k + dd];
      if (top == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      Integer q;
      mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lc.get_mpz_t());
      for (std::size_t i = 0; i <= dd; ++i) rem[k + i] -= q * divisor.coeffs_[i];
      quot[k] = std::move(q);
    }
    for (const auto& c : rem) {
      if (c != 0) return std::nullopt;
    }
    return IntPolynomial(std::move(quot));
  }

  /// Pseudo-remainder: lc(g)^(deg f - deg g + 1) f mod g, computed over Z.
  friend IntPolynomial pseudo_remainder(const IntPolynomial& f, const IntPolynomial& g) {
    if (g.is_zero()) throw std::invalid_argument("pseudo-remainder by the zero polynomial");
    if (f.degree() < g.degree()) return f;
    std::vector<Integer> r(f.coeffs_);
    const Integer& lc = g.leading();
    const auto dg = static_cast<std::size_t>(g.degree());
    // one step per degree from deg f down to deg g; r[k] is always the last entry
    for (int steps = f.degree() - g.degree() + 1; steps > 0; --steps) {
      const std::size_t k = r.size() - 1;
      Integer top = r[k];
      for (auto& c : r) c *= lc;
      for (std::size_t i = 0; i <= dg; ++i) r[k - dg + i] -= top * g.coeffs_[i];
      r.pop_back();
    }
    return IntPolynomial(std::move(r));
  }

  /// Primitive gcd with positive leading coefficient (content ignored).
  friend IntPolynomial gcd(const IntPolynomial& f, const IntPolynomial& g) {
    if (f.is_zero()) return g.primitive();
    if (g.is_zero()) return f.primitive();
    IntPolynomial a = f.primitive();
    IntPolynomial b = g.primitive();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      IntPolynomial r = pseudo_remainder(a, b).primitive();
      a = std::move(b);
      b = std::move(r);
    }
    return a.primitive();
  }

  /// Square-free part, primitive with positive leading coefficient.
  IntPolynomial square_free_part() const {
    if (degree() <= 0) return primitive();
    IntPolynomial g = gcd(*this, derivative());
    if (g.degree() == 0) return primitive();
    auto q = primitive().exact_quotient(g);
    if (!q) throw std::logic_error("square-free part: gcd does not divide");
    return q->primitive();
  }

  /// Human form, e.g. "x^5-2*x^4+x^3-x^2+x-1".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const Integer& c = coeffs_[k];
      if (c == 0) continue;
      bool first = out.empty();
      Integer mag = abs(c);
      if (c < 0) {
        out += '-';
      } else if (!first) {
        out += '+';
      }
      if (k == 0) {
        out += mag.get_str();
        continue;
      }
      if (mag != 1) out += mag.get_str() + "*";
      out += 'x';
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  /// Ascending coefficient list, e.g. "[-1,1,-1,1,-2,1]".
  std::string to_list_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      if (i) out += ',';
      out += coeffs_[i].get_str();
    }
    return out + "]";
  }

  friend std::ostream& operator<<(std::ostream& os, const IntPolynomial& p) { return os << p.to_string(); }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

namespace detail {

inline IntPolynomial parse_coefficient_list(std::string_view s) {
  std::vector<Integer> coeffs;
  std::string token;
  auto flush = [&] {
    if (token.empty()) throw ParseError("empty entry in coefficient list");
    Integer c;
    if (c.set_str(token[0] == '+' ? token.substr(1) : token, 10) != 0)
      throw ParseError("bad coefficient '" + token + "'");
    coeffs.push_back(c);
    token.clear();
  };
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == ',') {
      flush();
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) flush();
  return IntPolynomial(std::move(coeffs));
}

}  // namespace detail

/// Accepts the human form ("x^5-2*x^4+x^3-x^2+x-1", "2x^4", "3*x") and the
/// ascending coefficient list form ("[-1,1,-1,1,-2,1]").
inline IntPolynomial parse_polynomial(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty polynomial");
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated coefficient list");
    return detail::parse_coefficient_list(s);
  }

  std::vector<Integer> coeffs;
  std::size_t pos = 0;
  auto add = [&](const Integer& c, std::size_t deg) {
    if (coeffs.size() <= deg) coeffs.resize(deg + 1);
    coeffs[deg] += c;
  };
  auto read_uint = [&](std::size_t& p) {
    std::size_t start = p;
    while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
    return s.substr(start, p - start);
  };
  bool first = true;
  while (pos < s.size()) {
    int sgn_term = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sgn_term = s[pos] == '-' ? -1 : 1;
      ++pos;
    } else if (!first) {
      throw ParseError("expected '+' or '-' in polynomial '" + s + "'");
    }
    first = false;
    std::string digits = read_uint(pos);
    Integer coeff = digits.empty() ? Integer(1) : Integer(digits, 10);
    std::size_t deg = 0;
    if (pos < s.size() && s[pos] == '*') {
      if (digits.empty()) throw ParseError("dangling '*' in polynomial '" + s + "'");
      ++pos;
      if (pos >= s.size() || (s[pos] != 'x' && s[pos] != 'X'))
        throw ParseError("expected 'x' after '*' in polynomial '" + s + "'");
    }
    if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'X')) {
      ++pos;
      deg = 1;
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        std::string e = read_uint(pos);
        if (e.empty()) throw ParseError("missing exponent in polynomial '" + s + "'");
        deg = std::stoul(e);
      }
    } else if (digits.empty()) {
      throw ParseError("malformed term in polynomial '" + s + "'");
    }
    add(sgn_term * coeff, deg);
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace garsia
