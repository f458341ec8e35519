#pragma once

// Sturm sequences over Z[x] and exact real root counting at rational points.

#include <vector>

#include "garsia/algebra/int_polynomial.hpp"

namespace garsia {

class SturmSequence {
 public:
  /// `p` must be square-free and nonconstant for the counts to be meaningful.
  explicit SturmSequence(const IntPolynomial& p) {
    seq_.push_back(p.primitive());
    if (p.degree() < 1) return;
    seq_.push_back(p.derivative().primitive());
    while (seq_.back().degree() > 0) {
      const IntPolynomial& a = seq_[seq_.size() - 2];
      const IntPolynomial& b = seq_.back();
      // prem(a, b) = lc(b)^e rem(a, b); the next entry is a positive multiple of -rem(a, b)
      IntPolynomial raw = pseudo_remainder(a, b);
      if (raw.is_zero()) break;
      const int e = a.degree() - b.degree() + 1;
      const bool multiplier_negative = b.leading() < 0 && e % 2 == 1;
      IntPolynomial next = multiplier_negative ? raw : -raw;
      seq_.push_back(next.content_free());
    }
  }

  const std::vector<IntPolynomial>& polynomials() const { return seq_; }

  int sign_variations(const Rational& x) const {
    int count = 0;
    int last = 0;
    for (const auto& p : seq_) {
      int s = p.sign_at(x);
      if (s == 0) continue;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  }

  /// Number of distinct roots in the half-open interval (a, b].
  int count_half_open(const Rational& a, const Rational& b) const {
    return sign_variations(a) - sign_variations(b);
  }

  /// Number of distinct roots in the open interval (a, b).
  int count_open(const Rational& a, const Rational& b) const {
    int n = count_half_open(a, b);
    if (seq_.front().sign_at(b) == 0) --n;
    return n;
  }

  /// Number of distinct roots in the closed interval [a, b].
  int count_closed(const Rational& a, const Rational& b) const {
    int n = count_half_open(a, b);
    if (seq_.front().sign_at(a) == 0) ++n;
    return n;
  }

 private:
  std::vector<IntPolynomial> seq_;
};

}  // namespace garsia
