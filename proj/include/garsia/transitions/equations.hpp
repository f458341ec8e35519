#pragma once

// Coincidences between critical values of length-n words. A pair
// (a, side_a) = (b, side_b) holds at beta exactly when
// (beta - 1)(s_a - s_b) + u_a - u_b = 0, so it depends only on the digit
// difference d = a - b and on u_a - u_b. Pairs are grouped into patterns
// (d, c); positions where d is 0 may carry (0,0) or (1,1) in both words.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "garsia/algebra/algebraic_real.hpp"
#include "garsia/expansion/overlap.hpp"
#include "garsia/expansion/word.hpp"

namespace garsia {

struct EquationPair {
  Word word_a;
  Side side_a = Side::L;
  Word word_b;
  Side side_b = Side::L;

  std::string to_string() const {
    return word_a.to_string() + "_" + garsia::to_string(side_a) + " = " + word_b.to_string() + "_" +
           garsia::to_string(side_b);
  }
  friend bool operator==(const EquationPair&, const EquationPair&) = default;
};

/// Scaled difference (x - 1)(s_a - s_b) + (u_a - u_b), not normalized.
inline IntPolynomial signed_pair_polynomial(const EquationPair& p) {
  return detail::critical_difference(p.word_a, p.side_a, p.word_b, p.side_b);
}

/// The pair's polynomial, primitive with positive leading coefficient.
inline IntPolynomial pair_polynomial(const EquationPair& p) { return signed_pair_polynomial(p).primitive(); }

enum class Shape : std::uint8_t { UL = 0, LL = 1, LU = 2 };

inline int shape_constant(Shape s) { return s == Shape::UL ? 1 : (s == Shape::LL ? 0 : -1); }

/// One (d, shape) class. `index` encodes d in base 3, most significant digit
/// first, digit v meaning d_k = v - 1.
struct EquationPattern {
  int n = 0;
  std::uint64_t index = 0;
  Shape shape = Shape::UL;

  std::uint64_t id() const { return index * 3 + static_cast<std::uint64_t>(shape); }
  static EquationPattern from_id(int n, std::uint64_t id) {
    return {n, id / 3, static_cast<Shape>(id % 3)};
  }

  std::vector<int> difference() const {
    std::vector<int> d(static_cast<std::size_t>(n));
    std::uint64_t k = index;
    for (int i = n - 1; i >= 0; --i) {
      d[static_cast<std::size_t>(i)] = static_cast<int>(k % 3) - 1;
      k /= 3;
    }
    return d;
  }

  int zeros() const {
    int z = 0;
    for (int v : difference()) z += v == 0;
    return z;
  }

  std::uint64_t source_count() const { return std::uint64_t{1} << zeros(); }

  IntPolynomial polynomial() const {
    std::vector<Integer> diff(static_cast<std::size_t>(n), 0);
    auto d = difference();
    for (int k = 0; k < n; ++k) diff[static_cast<std::size_t>(n - 1 - k)] = d[static_cast<std::size_t>(k)];
    IntPolynomial p = IntPolynomial{-1, 1} * IntPolynomial(std::move(diff));
    if (int c = shape_constant(shape)) p = p + IntPolynomial{c};
    return p.primitive();
  }

  /// The source pair whose shared digits are given by `fill` (bit j set puts
  /// (1,1) at the j-th zero of d, counted from the left).
  EquationPair pair(std::uint64_t fill = 0) const {
    std::vector<int> a, b;
    int j = 0;
    for (int v : difference()) {
      if (v == 0) {
        int bit = static_cast<int>((fill >> j++) & 1U);
        a.push_back(bit);
        b.push_back(bit);
      } else {
        a.push_back(v > 0 ? 1 : 0);
        b.push_back(v > 0 ? 0 : 1);
      }
    }
    Side sa = shape == Shape::LU ? Side::L : (shape == Shape::UL ? Side::U : Side::L);
    Side sb = shape == Shape::LU ? Side::U : Side::L;
    return {Word::from_digits(a), sa, Word::from_digits(b), sb};
  }
};

namespace detail {

inline std::uint64_t pow3(int n) {
  std::uint64_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

/// Shapes of the pattern with difference index k that can vanish somewhere
/// in (1, infinity): d must start with -1, and LL, LU need a +1 digit.
inline int admissible_shapes(int n, std::uint64_t k, Shape out[3]) {
  bool leading_seen = false, has_plus = false;
  std::uint64_t scale = pow3(n - 1);
  for (int i = 0; i < n; ++i, scale /= 3) {
    int v = static_cast<int>((k / scale) % 3) - 1;
    if (!leading_seen && v != 0) {
      if (v > 0) return 0;
      leading_seen = true;
    }
    has_plus |= v > 0;
  }
  if (!leading_seen) return 0;
  int count = 0;
  out[count++] = Shape::UL;
  if (has_plus) {
    out[count++] = Shape::LL;
    out[count++] = Shape::LU;
  }
  return count;
}

}  // namespace detail

/// Visits the patterns whose difference index lies in [begin, end).
template <class F>
void for_each_pattern(int n, std::uint64_t begin, std::uint64_t end, F&& f) {
  Shape shapes[3];
  for (std::uint64_t k = begin; k < end; ++k) {
    int c = detail::admissible_shapes(n, k, shapes);
    for (int i = 0; i < c; ++i) f(EquationPattern{n, k, shapes[i]});
  }
}

template <class F>
void for_each_pattern(int n, F&& f) {
  for_each_pattern(n, 0, detail::pow3(n), std::forward<F>(f));
}

/// Visits every candidate pair of length n, pattern by pattern.
template <class F>
void for_each_candidate_pair(int n, F&& f) {
  for_each_pattern(n, [&](const EquationPattern& p) {
    const std::uint64_t count = p.source_count();
    for (std::uint64_t fill = 0; fill < count; ++fill) f(p.pair(fill));
  });
}

inline std::vector<EquationPair> candidate_pairs(int n) {
  if (n < 1 || n > 12) throw std::invalid_argument("candidate_pairs materializes lengths 1..12 only");
  std::vector<EquationPair> out;
  for_each_candidate_pair(n, [&](EquationPair p) { out.push_back(std::move(p)); });
  return out;
}

/// A maximal open interval with algebraic endpoints.
struct OpenInterval {
  AlgebraicReal left;
  AlgebraicReal right;
  Rational sample;  // a rational point inside
};

/// Rational strictly between a < b.
inline Rational rational_between(const AlgebraicReal& a, const AlgebraicReal& b) {
  Rational eps = (b.hi() - a.lo()) / 4;
  if (eps <= 0) eps = Rational(1, 1024);
  for (;;) {
    auto [alo, ahi] = a.refine(eps);
    auto [blo, bhi] = b.refine(eps);
    if (ahi < blo) return (ahi + blo) / 2;
    eps /= 16;
  }
}

/// Where critical(a, side_a) < critical(b, side_b) holds strictly inside
/// (lo, hi): the open intervals between consecutive roots of the difference
/// on which its sign, taken at a rational sample point, is positive.
inline std::vector<OpenInterval> holds_on(const EquationPair& p, const Rational& lo, const Rational& hi) {
  if (!(Rational(1) <= lo && lo < hi)) throw std::invalid_argument("range must satisfy 1 <= lo < hi");
  IntPolynomial f = detail::critical_difference(p.word_b, p.side_b, p.word_a, p.side_a);
  std::vector<AlgebraicReal> cuts{AlgebraicReal::from_rational(lo)};
  for (auto& r : isolate_real_roots(f, lo, hi)) cuts.push_back(std::move(r));
  cuts.push_back(AlgebraicReal::from_rational(hi));
  std::vector<OpenInterval> out;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    Rational mid = rational_between(cuts[i], cuts[i + 1]);
    if (f.sign_at(mid) > 0) out.push_back({cuts[i], cuts[i + 1], mid});
  }
  return out;
}

}  // namespace garsia
