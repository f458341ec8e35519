#pragma once

// Length-n words grouped by exact value, and the interval [L, U] of points
// whose expansions may start with a word.
//
// Internally every value is scaled by beta^n: the word (a_1..a_n) becomes
// s = sum a_k x^{n-k}, and critical values are scaled by beta^n (beta - 1),
// giving t_L = (x - 1) s and t_U = t_L + 1. The scale is positive, so order
// and equality are unchanged.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <utility>
#include <vector>

#include "garsia/algebra/number_field.hpp"
#include "garsia/expansion/beta_context.hpp"
#include "garsia/expansion/word.hpp"

namespace garsia {

struct WordBounds {
  Interval lower;
  Interval upper;
  std::optional<FieldElement> lower_exact;  // symbolic mode
  std::optional<FieldElement> upper_exact;
  std::optional<Rational> lower_rational;   // rational beta
  std::optional<Rational> upper_rational;
};

struct PrefixClass {
  Word representative;  // lexicographically least member
  std::uint64_t weight = 1;
  std::optional<FieldElement> key;    // sum a_k x^{n-k} mod p, symbolic mode
  std::optional<Rational> rational_key;  // sum a_k beta^{n-k}, rational beta
  WordBounds bounds;
};

namespace detail {

/// beta^-n and beta^-n / (beta - 1) in the number field.
struct FieldScales {
  FieldElement inv_pow;   // beta^-n
  FieldElement tail;      // beta^-n / (beta - 1)
  FieldElement critical;  // beta^n (beta - 1)
};

inline FieldScales field_scales(const NumberField& f, int n) {
  FieldElement bn = f.pow(f.generator(), static_cast<unsigned long>(n));
  FieldElement bm1 = f.sub(f.generator(), f.one());
  FieldElement crit = f.mul(bn, bm1);
  return {f.inverse(bn), f.inverse(crit), crit};
}

inline Rational rational_scaled_value(const Word& w, const Rational& beta) {
  Rational s = 0;
  for (int k = 1; k <= w.length(); ++k) s = s * beta + w.digit(k);
  return s;
}

/// s(beta) = sum a_k beta^{n-k} by Horner.
inline Interval scaled_value(const Word& w, const Interval& beta) {
  const mpfr_prec_t bits = beta.precision();
  Interval one(Rational(1), bits);
  Interval s(Rational(0), bits);
  for (int k = 1; k <= w.length(); ++k) {
    s = s * beta;
    if (w.digit(k)) s = s + one;
  }
  return s;
}

struct ClassRecord {
  Word rep;
  std::uint64_t weight;
  std::optional<FieldElement> s;
  std::optional<Rational> q;
};

/// Groups all 2^n words by exact value. Symbolic mode keys by s mod p;
/// rational beta keys by the rational s; any other numeric beta gives one
/// class per word. Result is sorted by representative.
inline std::vector<ClassRecord> build_classes(const BetaContext& ctx, int n, std::size_t budget = 50'000'000) {
  if (n < 1 || n > Word::max_length) throw std::invalid_argument("word length must be in [1, 63]");
  std::vector<ClassRecord> out;
  if (ctx.is_symbolic()) {
    const NumberField& f = ctx.field();
    std::vector<ClassRecord> level{{Word(0, 0), 1, f.zero(), std::nullopt}};
    FieldElement one = f.one();
    for (int step = 0; step < n; ++step) {
      std::unordered_map<FieldElement, std::size_t, FieldElementHash> index;
      std::vector<ClassRecord> next;
      next.reserve(level.size() * 2);
      for (const auto& c : level) {
        FieldElement shifted = f.mul_x(*c.s);
        for (int a = 0; a <= 1; ++a) {
          FieldElement s = a ? f.add(shifted, one) : shifted;
          Word w = c.rep.appended(a);
          auto [it, fresh] = index.try_emplace(s, next.size());
          if (fresh) {
            next.push_back({w, c.weight, std::move(s), std::nullopt});
          } else {
            auto& e = next[it->second];
            e.weight += c.weight;
            if (w < e.rep) e.rep = w;
          }
        }
      }
      if (next.size() > budget) throw std::length_error("prefix class budget exceeded");
      level = std::move(next);
    }
    out = std::move(level);
  } else if (auto beta = ctx.rational()) {
    std::vector<ClassRecord> level{{Word(0, 0), 1, std::nullopt, Rational(0)}};
    for (int step = 0; step < n; ++step) {
      std::unordered_map<Rational, std::size_t, RationalHash> index;
      std::vector<ClassRecord> next;
      next.reserve(level.size() * 2);
      for (const auto& c : level) {
        Rational shifted = *c.q * *beta;
        for (int a = 0; a <= 1; ++a) {
          Rational s = shifted + a;
          Word w = c.rep.appended(a);
          auto [it, fresh] = index.try_emplace(s, next.size());
          if (fresh) {
            next.push_back({w, c.weight, std::nullopt, std::move(s)});
          } else {
            auto& e = next[it->second];
            e.weight += c.weight;
            if (w < e.rep) e.rep = w;
          }
        }
      }
      if (next.size() > budget) throw std::length_error("prefix class budget exceeded");
      level = std::move(next);
    }
    out = std::move(level);
  } else {
    if (n > 26 || (std::size_t{1} << n) > budget) throw std::length_error("too many words for uncompressed numeric mode");
    out.reserve(std::size_t{1} << n);
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) out.push_back({Word(b, n), 1, std::nullopt, std::nullopt});
  }
  std::sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b) { return a.rep < b.rep; });
  return out;
}

}  // namespace detail

/// L = sum a_k beta^-k and U = L + beta^-n / (beta - 1).
inline WordBounds word_bounds(const Word& w, const BetaContext& ctx) {
  const int n = w.length();
  if (ctx.is_symbolic()) {
    const NumberField& f = ctx.field();
    auto scales = detail::field_scales(f, n);
    FieldElement s = f.reduce(w.scaled_polynomial());
    FieldElement lo = f.mul(s, scales.inv_pow);
    FieldElement hi = f.add(lo, scales.tail);
    Interval b = ctx.beta(0);
    return {lo.eval(b), hi.eval(b), lo, hi, std::nullopt, std::nullopt};
  }
  const Interval b = ctx.beta(0);
  Interval lo = detail::scaled_value(w, b) * ctx.inverse_power(n);
  Interval hi = lo + ctx.inverse_power(n) * ctx.tail_constant();
  WordBounds out{lo, hi, std::nullopt, std::nullopt, std::nullopt, std::nullopt};
  if (auto q = ctx.rational()) {
    Rational inv = 1 / pow(*q, static_cast<unsigned long>(n));
    out.lower_rational = detail::rational_scaled_value(w, *q) * inv;
    out.upper_rational = *out.lower_rational + inv / (*q - 1);
    out.lower = Interval(*out.lower_rational, b.precision());
    out.upper = Interval(*out.upper_rational, b.precision());
  }
  return out;
}

/// All 2^n words of length n partitioned into classes of equal value, with
/// weights and bounds, sorted by representative.
inline std::vector<PrefixClass> enumerate_prefix_classes(const BetaContext& ctx, int n) {
  std::vector<PrefixClass> out;
  auto records = detail::build_classes(ctx, n);
  out.reserve(records.size());
  std::optional<detail::FieldScales> scales;
  if (ctx.is_symbolic()) scales = detail::field_scales(ctx.field(), n);
  for (auto& r : records) {
    PrefixClass c;
    c.representative = r.rep;
    c.weight = r.weight;
    if (ctx.is_symbolic()) {
      const NumberField& f = ctx.field();
      FieldElement lo = f.mul(*r.s, scales->inv_pow);
      FieldElement hi = f.add(lo, scales->tail);
      Interval b = ctx.beta(0);
      c.bounds = {lo.eval(b), hi.eval(b), lo, hi, std::nullopt, std::nullopt};
      c.key = std::move(r.s);
    } else {
      c.bounds = word_bounds(r.rep, ctx);
      c.rational_key = std::move(r.q);
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace garsia
