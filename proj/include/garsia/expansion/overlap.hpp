#pragma once

// m_n(beta): the largest number of length-n words that can begin an
// expansion of one point, found by sweeping the sorted critical values.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "garsia/expansion/ordering.hpp"
#include "garsia/expansion/prefix_classes.hpp"

namespace garsia {

/// One distinct critical value, named by its least (word, side).
struct CriticalPoint {
  Word word;
  Side side = Side::L;
  std::uint64_t entering = 0;  // weight of classes with L here
  std::uint64_t leaving = 0;   // weight of classes with U here
};

struct OverlapProfile {
  int n = 0;
  std::vector<CriticalPoint> points;        // ascending and pairwise distinct
  std::vector<std::uint64_t> open_counts;   // count on (points[i], points[i+1])
  std::vector<std::uint64_t> closed_counts; // count at points[i]
  std::uint64_t m = 0;                      // max of open_counts
  std::size_t witness = 0;                  // leftmost segment attaining m
  std::uint64_t max_closed = 0;
  std::size_t class_count = 0;

  std::size_t segments() const { return open_counts.size(); }
};

namespace detail {

struct ScaledCritical {
  Word word;
  Side side;
  std::uint64_t entering;
  std::uint64_t leaving;
  std::optional<FieldElement> t;  // symbolic
  std::optional<Rational> q;      // rational beta
};

inline std::vector<ScaledCritical> scaled_criticals(const BetaContext& ctx, const std::vector<ClassRecord>& classes) {
  std::vector<ScaledCritical> items;
  items.reserve(classes.size() * 2);
  if (ctx.is_symbolic()) {
    const NumberField& f = ctx.field();
    FieldElement one = f.one();
    std::unordered_map<FieldElement, std::size_t, FieldElementHash> index;
    auto add = [&](FieldElement t, const Word& w, Side side, std::uint64_t weight) {
      auto [it, fresh] = index.try_emplace(t, items.size());
      if (fresh) items.push_back({w, side, 0, 0, std::move(t), std::nullopt});
      auto& e = items[it->second];
      (side == Side::L ? e.entering : e.leaving) += weight;
      if (std::make_pair(w, side) < std::make_pair(e.word, e.side)) {
        e.word = w;
        e.side = side;
      }
    };
    for (const auto& c : classes) {
      FieldElement tl = f.sub(f.mul_x(*c.s), *c.s);
      FieldElement tu = f.add(tl, one);
      add(std::move(tl), c.rep, Side::L, c.weight);
      add(std::move(tu), c.rep, Side::U, c.weight);
    }
  } else if (auto beta = ctx.rational()) {
    std::unordered_map<Rational, std::size_t, RationalHash> index;
    auto add = [&](Rational t, const Word& w, Side side, std::uint64_t weight) {
      auto [it, fresh] = index.try_emplace(t, items.size());
      if (fresh) items.push_back({w, side, 0, 0, std::nullopt, std::move(t)});
      auto& e = items[it->second];
      (side == Side::L ? e.entering : e.leaving) += weight;
      if (std::make_pair(w, side) < std::make_pair(e.word, e.side)) {
        e.word = w;
        e.side = side;
      }
    };
    for (const auto& c : classes) {
      Rational tl = (*beta - 1) * *c.q;
      add(tl, c.rep, Side::L, c.weight);
      add(tl + 1, c.rep, Side::U, c.weight);
    }
  } else {
    for (const auto& c : classes) {
      items.push_back({c.rep, Side::L, c.weight, 0, std::nullopt, std::nullopt});
      items.push_back({c.rep, Side::U, 0, c.weight, std::nullopt, std::nullopt});
    }
  }
  return items;
}

/// (x - 1) s_a + u_a - ((x - 1) s_b + u_b), the scaled difference of two
/// critical values as an integer polynomial in beta.
inline IntPolynomial critical_difference(const Word& a, Side sa, const Word& b, Side sb) {
  IntPolynomial diff = IntPolynomial{-1, 1} * (a.scaled_polynomial() - b.scaled_polynomial());
  const int u = (sa == Side::U ? 1 : 0) - (sb == Side::U ? 1 : 0);
  if (u != 0) diff = diff + IntPolynomial{u};
  return diff;
}

inline Interval scaled_enclosure(const ScaledCritical& c, const BetaContext& ctx, int level) {
  Interval b = ctx.beta(level);
  const mpfr_prec_t bits = b.precision();
  if (c.t) return c.t->eval(b);
  if (c.q) return Interval(*c.q, bits);
  Interval t = (b - Interval(Rational(1), bits)) * scaled_value(c.word, b);
  if (c.side == Side::U) t = t + Interval(Rational(1), bits);
  return t;
}

inline std::optional<std::strong_ordering> to_ordering(std::optional<int> s) {
  if (!s) return std::nullopt;
  if (*s < 0) return std::strong_ordering::less;
  if (*s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

/// Sorted distinct critical values with their entering and leaving weights.
inline std::vector<CriticalPoint> sorted_criticals(const BetaContext& ctx, const std::vector<ClassRecord>& classes) {
  std::vector<ScaledCritical> items = scaled_criticals(ctx, classes);
  auto enclosure = [&](std::size_t i, int level) { return scaled_enclosure(items[i], ctx, level); };
  auto exact = [&](std::size_t i, std::size_t j) -> std::optional<std::strong_ordering> {
    if (items[i].t) return to_ordering(ctx.sign(ctx.field().sub(*items[i].t, *items[j].t)));
    if (items[i].q) return to_ordering(sgn(*items[i].q - *items[j].q));
    return to_ordering(ctx.exact_sign(critical_difference(items[i].word, items[i].side, items[j].word, items[j].side)));
  };
  auto groups = exact_order(items.size(), ctx.max_level(), enclosure, exact);
  std::vector<CriticalPoint> points;
  points.reserve(groups.size());
  for (const auto& g : groups) {
    CriticalPoint p{items[g.front()].word, items[g.front()].side, 0, 0};
    for (std::size_t i : g) {
      p.entering += items[i].entering;
      p.leaving += items[i].leaving;
      if (std::make_pair(items[i].word, items[i].side) < std::make_pair(p.word, p.side)) {
        p.word = items[i].word;
        p.side = items[i].side;
      }
    }
    points.push_back(p);
  }
  return points;
}

}  // namespace detail

/// Sweep over the sorted distinct critical values: at each value the classes
/// with U there leave and those with L there enter, so the running weight is
/// the count on the open interval to its right.
inline OverlapProfile max_overlap(const BetaContext& ctx, int n) {
  auto classes = detail::build_classes(ctx, n);
  OverlapProfile prof;
  prof.n = n;
  prof.class_count = classes.size();
  prof.points = detail::sorted_criticals(ctx, classes);
  std::uint64_t running = 0;
  for (std::size_t i = 0; i < prof.points.size(); ++i) {
    const auto& p = prof.points[i];
    prof.closed_counts.push_back(running + p.entering);
    running = running + p.entering - p.leaving;
    if (i + 1 < prof.points.size()) prof.open_counts.push_back(running);
  }
  for (std::size_t i = 0; i < prof.open_counts.size(); ++i) {
    if (prof.open_counts[i] > prof.m) {
      prof.m = prof.open_counts[i];
      prof.witness = i;
    }
  }
  for (auto c : prof.closed_counts) prof.max_closed = std::max(prof.max_closed, c);
  return prof;
}

/// Enclosure of the actual critical value points[i] (not scaled).
inline Interval critical_value(const OverlapProfile& prof, std::size_t i, const BetaContext& ctx, int level = 0) {
  const auto& p = prof.points[i];
  WordBounds wb = word_bounds(p.word, ctx);
  if (level == 0) return p.side == Side::L ? wb.lower : wb.upper;
  Interval b = ctx.beta(level);
  Interval lo = detail::scaled_value(p.word, b) * ctx.inverse_power(prof.n, level);
  if (p.side == Side::U) lo = lo + ctx.inverse_power(prof.n, level) * ctx.tail_constant(level);
  return lo;
}

/// Exact form of points[i] in symbolic mode.
inline std::optional<FieldElement> critical_value_exact(const OverlapProfile& prof, std::size_t i, const BetaContext& ctx) {
  if (!ctx.is_symbolic()) return std::nullopt;
  WordBounds wb = word_bounds(prof.points[i].word, ctx);
  return prof.points[i].side == Side::L ? wb.lower_exact : wb.upper_exact;
}

enum class CountMode { open_generic, closed_pointwise };

/// A point of I_beta: an exact rational, an exact field element (symbolic
/// mode), or an enclosure.
using Point = std::variant<Rational, FieldElement, Interval>;

/// Number of words (with multiplicity) whose interval [L, U] contains x:
/// strictly inside for open_generic, closed containment for closed_pointwise.
inline std::uint64_t count_valid(const Point& x, const BetaContext& ctx, int n, CountMode mode) {
  auto classes = detail::build_classes(ctx, n);
  std::optional<FieldElement> fx;  // x * beta^n (beta - 1) in the field
  if (ctx.is_symbolic()) {
    const NumberField& f = ctx.field();
    auto scales = detail::field_scales(f, n);
    if (auto q = std::get_if<Rational>(&x)) fx = f.mul(f.from_rational(*q), scales.critical);
    if (auto e = std::get_if<FieldElement>(&x)) fx = f.mul(*e, scales.critical);
  } else if (std::holds_alternative<FieldElement>(x)) {
    throw std::invalid_argument("field element points need symbolic mode");
  }
  auto scaled_x = [&](int level) -> Interval {
    Interval b = ctx.beta(level);
    const mpfr_prec_t bits = b.precision();
    if (fx) return fx->eval(b);
    Interval crit = (b - Interval(Rational(1), bits)) / ctx.inverse_power(n, level);
    if (auto q = std::get_if<Rational>(&x)) return Interval(*q, bits) * crit;
    return std::get<Interval>(x) * crit;
  };
  // sign of X - t for the critical value (w, side)
  auto sign_vs = [&](const detail::ClassRecord& c, Side side) -> int {
    if (fx) {
      const NumberField& f = ctx.field();
      FieldElement t = f.sub(f.mul_x(*c.s), *c.s);
      if (side == Side::U) t = f.add(t, f.one());
      return ctx.sign(f.sub(*fx, t));
    }
    for (int level = 0; level <= ctx.max_level(); ++level) {
      detail::ScaledCritical sc{c.rep, side, 0, 0, std::nullopt, std::nullopt};
      Interval d = scaled_x(level) - detail::scaled_enclosure(sc, ctx, level);
      if (auto s = d.sign()) return *s;
    }
    if (auto q = std::get_if<Rational>(&x)) {
      // q_num x^n (x - 1) - q_den ((x - 1) s + u)
      IntPolynomial lhs = Integer(q->get_num()) * (IntPolynomial{-1, 1}.shifted(static_cast<std::size_t>(n)));
      IntPolynomial t = IntPolynomial{-1, 1} * c.rep.scaled_polynomial();
      if (side == Side::U) t = t + IntPolynomial{1};
      if (auto s = ctx.exact_sign(lhs - Integer(q->get_den()) * t)) return *s;
    }
    throw IndeterminateOrdering("point too close to a critical value to decide containment");
  };
  std::uint64_t total = 0;
  for (const auto& c : classes) {
    const int sl = sign_vs(c, Side::L);
    if (sl < 0 || (sl == 0 && mode == CountMode::open_generic)) continue;
    const int su = sign_vs(c, Side::U);
    if (su > 0 || (su == 0 && mode == CountMode::open_generic)) continue;
    total += c.weight;
  }
  return total;
}

}  // namespace garsia
