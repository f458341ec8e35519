#pragma once

// Arithmetic in Q[x]/(p) for a monic integer polynomial p.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "garsia/algebra/algebraic_real.hpp"
#include "garsia/algebra/int_polynomial.hpp"
#include "garsia/algebra/interval.hpp"

namespace garsia {

/// c_0 + c_1 x + ... + c_{d-1} x^{d-1}, all divided by `den`.
/// Canonical: den > 0 and gcd(c_0, ..., c_{d-1}, den) = 1.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(std::vector<Integer> coeffs, Integer den) : coeffs_(std::move(coeffs)), den_(std::move(den)) {
    canonicalize();
  }

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  const Integer& denominator() const { return den_; }
  std::size_t dimension() const { return coeffs_.size(); }
  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }
  bool is_integral() const { return den_ == 1; }

  /// The numerator as an integer polynomial, so sign(e(beta)) = sign(numerator(beta)).
  IntPolynomial numerator() const { return IntPolynomial(coeffs_); }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.den_ == b.den_ && a.coeffs_ == b.coeffs_;
  }

  Interval eval(const Interval& beta) const {
    Interval acc(Rational(0), beta.precision());
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * beta + Interval(Rational(coeffs_[i]), beta.precision());
    if (den_ == 1) return acc;
    return acc / Interval(Rational(den_), beta.precision());
  }

  /// Polynomial in `symbol`, highest power first: "-beta+2", "(3*beta+1)/5".
  std::string to_string(const std::string& symbol = "beta") const {
    std::string out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
      const Integer& c = coeffs_[i];
      if (c == 0) continue;
      Integer mag = abs(c);
      if (c < 0) {
        out += "-";
      } else if (!first) {
        out += "+";
      }
      if (i == 0) {
        out += mag.get_str();
      } else {
        if (mag != 1) out += mag.get_str() + "*";
        out += symbol;
        if (i > 1) out += "^" + std::to_string(i);
      }
      first = false;
    }
    if (first) out = "0";
    if (den_ != 1) out = "(" + out + ")/" + den_.get_str();
    return out;
  }

 private:
  void canonicalize() {
    if (den_ == 0) throw std::domain_error("field element with zero denominator");
    if (den_ < 0) {
      den_ = -den_;
      for (auto& c : coeffs_) c = -c;
    }
    Integer g = den_;
    for (const auto& c : coeffs_) {
      if (g == 1) break;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    }
    if (g != 1) {
      for (auto& c : coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
    }
  }

  std::vector<Integer> coeffs_;
  Integer den_ = 1;
};

struct FieldElementHash {
  std::size_t operator()(const FieldElement& e) const noexcept {
    IntegerHash h;
    std::size_t acc = h(e.denominator());
    for (const auto& c : e.coeffs()) acc = acc * 1000003u ^ h(c);
    return acc;
  }
};

/// Reduces an integer coefficient vector (ascending) modulo a monic p of
/// degree d, in place, leaving exactly d coefficients.
inline void reduce_in_place(std::vector<Integer>& c, const IntPolynomial& p) {
  const int d = p.degree();
  const auto& pc = p.coefficients();
  for (std::size_t top = c.size(); top-- > static_cast<std::size_t>(d);) {
    if (c[top] == 0) continue;
    Integer lead = c[top];
    // x^top = x^(top-d) * x^d, and x^d = -(p_0 + ... + p_{d-1} x^{d-1})
    const std::size_t shift = top - static_cast<std::size_t>(d);
    for (int i = 0; i < d; ++i) {
      if (pc[static_cast<std::size_t>(i)] != 0) c[shift + static_cast<std::size_t>(i)] -= lead * pc[static_cast<std::size_t>(i)];
    }
    c[top] = 0;
  }
  c.resize(static_cast<std::size_t>(d));
}

/// Canonical remainder of q modulo a monic p.
inline FieldElement field_reduce(const IntPolynomial& q, const IntPolynomial& p) {
  if (!p.is_monic()) throw std::invalid_argument("field_reduce: modulus " + p.to_string() + " is not monic");
  if (p.degree() < 1) throw std::invalid_argument("field_reduce: modulus must have positive degree");
  std::vector<Integer> c = q.coefficients();
  reduce_in_place(c, p);
  return FieldElement(std::move(c), Integer(1));
}

/// Q[x]/(p) for monic p of positive degree. p need not be irreducible, but
/// inverse() then fails for zero divisors.
class NumberField {
 public:
  explicit NumberField(IntPolynomial modulus) : p_(std::move(modulus)) {
    if (!p_.is_monic()) throw std::invalid_argument("number field modulus " + p_.to_string() + " is not monic");
    if (p_.degree() < 1) throw std::invalid_argument("number field modulus must have positive degree");
  }

  const IntPolynomial& modulus() const { return p_; }
  int degree() const { return p_.degree(); }

  FieldElement zero() const { return FieldElement(std::vector<Integer>(dim(), 0), 1); }
  FieldElement one() const { return from_rational(Rational(1)); }
  FieldElement generator() const { return reduce(IntPolynomial::x()); }
  FieldElement from_rational(const Rational& q) const {
    std::vector<Integer> c(dim(), 0);
    c[0] = q.get_num();
    return FieldElement(std::move(c), q.get_den());
  }
  FieldElement reduce(const IntPolynomial& q) const { return field_reduce(q, p_); }

  FieldElement add(const FieldElement& a, const FieldElement& b) const { return combine(a, b, false); }
  FieldElement sub(const FieldElement& a, const FieldElement& b) const { return combine(a, b, true); }
  FieldElement neg(const FieldElement& a) const {
    std::vector<Integer> c = a.coeffs();
    for (auto& v : c) v = -v;
    return FieldElement(std::move(c), a.denominator());
  }
  FieldElement scale(const FieldElement& a, const Rational& k) const {
    std::vector<Integer> c = a.coeffs();
    for (auto& v : c) v *= k.get_num();
    return FieldElement(std::move(c), a.denominator() * k.get_den());
  }

  FieldElement mul(const FieldElement& a, const FieldElement& b) const {
    check(a);
    check(b);
    std::vector<Integer> c(2 * dim() - 1, 0);
    for (std::size_t i = 0; i < dim(); ++i) {
      if (a.coeffs()[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    reduce_in_place(c, p_);
    return FieldElement(std::move(c), a.denominator() * b.denominator());
  }

  /// Multiplication by the generator x.
  FieldElement mul_x(const FieldElement& a) const {
    check(a);
    std::vector<Integer> c(dim() + 1, 0);
    for (std::size_t i = 0; i < dim(); ++i) c[i + 1] = a.coeffs()[i];
    reduce_in_place(c, p_);
    return FieldElement(std::move(c), a.denominator());
  }

  FieldElement pow(const FieldElement& a, unsigned long e) const {
    FieldElement result = one();
    FieldElement base = a;
    while (e > 0) {
      if (e & 1UL) result = mul(result, base);
      e >>= 1;
      if (e > 0) base = mul(base, base);
    }
    return result;
  }

  /// Multiplicative inverse by solving the d x d linear system M y = e_0 over Q,
  /// where column j of M is a * x^j. Throws std::domain_error for zero divisors.
  FieldElement inverse(const FieldElement& a) const {
    check(a);
    const std::size_t d = dim();
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(d + 1));
    FieldElement col(a.coeffs(), 1);
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t i = 0; i < d; ++i) m[i][j] = col.coeffs()[i];
      col = mul_x(col);
    }
    m[0][d] = 1;
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t pivot = c;
      while (pivot < d && m[pivot][c] == 0) ++pivot;
      if (pivot == d) throw std::domain_error("element is not invertible modulo " + p_.to_string());
      std::swap(m[pivot], m[c]);
      for (std::size_t r = 0; r < d; ++r) {
        if (r == c || m[r][c] == 0) continue;
        Rational f = m[r][c] / m[c][c];
        for (std::size_t k = c; k <= d; ++k) m[r][k] -= f * m[c][k];
      }
    }
    Integer den = 1;
    std::vector<Rational> y(d);
    for (std::size_t i = 0; i < d; ++i) {
      y[i] = m[i][d] / m[i][i];
      y[i].canonicalize();
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), y[i].get_den_mpz_t());
    }
    std::vector<Integer> c(d);
    for (std::size_t i = 0; i < d; ++i) c[i] = y[i].get_num() * (den / y[i].get_den());
    // y is the inverse of the numerator; a^-1 = a.den * y
    return scale(FieldElement(std::move(c), den), Rational(a.denominator()));
  }

  FieldElement div(const FieldElement& a, const FieldElement& b) const { return mul(a, inverse(b)); }

 private:
  std::size_t dim() const { return static_cast<std::size_t>(p_.degree()); }
  void check(const FieldElement& a) const {
    if (a.dimension() != dim()) throw std::invalid_argument("field element of the wrong dimension");
  }
  FieldElement combine(const FieldElement& a, const FieldElement& b, bool subtract) const {
    check(a);
    check(b);
    std::vector<Integer> c(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      Integer x = a.coeffs()[i] * b.denominator();
      Integer y = b.coeffs()[i] * a.denominator();
      if (subtract) {
        c[i] = x - y;
      } else {
        c[i] = x + y;
      }
    }
    return FieldElement(std::move(c), a.denominator() * b.denominator());
  }

  IntPolynomial p_;
};

/// Exact sign of e at beta. beta's defining polynomial must be the modulus
/// (made primitive with positive leading coefficient).
inline int element_sign(const FieldElement& e, const IntPolynomial& modulus, const AlgebraicReal& beta) {
  if (!(beta.polynomial() == modulus.primitive()))
    throw std::invalid_argument("element_sign: modulus " + modulus.to_string() + " does not define " +
                                beta.polynomial().to_string());
  if (e.is_zero()) return 0;
  return beta.sign_of(e.numerator());
}

inline int element_sign(const FieldElement& e, const NumberField& field, const AlgebraicReal& beta) {
  return element_sign(e, field.modulus(), beta);
}

}  // namespace garsia
