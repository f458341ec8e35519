#pragma once

// D_n(beta), the distinct values sum a_k beta^-k with multiplicities p_n,
// and the quantities derived from it.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "garsia/expansion/ordering.hpp"
#include "garsia/expansion/overlap.hpp"
#include "garsia/expansion/prefix_classes.hpp"

namespace garsia {

struct ValueEntry {
  Word representative;
  std::uint64_t multiplicity = 1;
  std::optional<FieldElement> scaled;  // beta^n x in Q[x]/(p), symbolic mode
  std::optional<Rational> rational;    // x itself, rational beta
};

struct ValueSet {
  int n = 0;
  std::vector<ValueEntry> entries;  // ascending by value when sorted
  bool sorted = false;

  std::uint64_t total() const {
    std::uint64_t t = 0;
    for (const auto& e : entries) t += e.multiplicity;
    return t;
  }
};

/// D_n(beta) with multiplicities, built digit by digit with merging. Needs
/// an exact beta with exact equality: symbolic mode or rational beta.
inline ValueSet distinct_values(const BetaContext& ctx, int n, bool sort_values = true,
                                std::size_t budget = 20'000'000) {
  if (!ctx.is_symbolic() && !ctx.rational())
    throw std::invalid_argument("distinct values need symbolic mode or a rational beta");
  auto classes = detail::build_classes(ctx, n, budget);
  ValueSet vs;
  vs.n = n;
  vs.entries.reserve(classes.size());
  std::optional<Rational> inv;
  if (auto b = ctx.rational()) inv = 1 / pow(*b, static_cast<unsigned long>(n));
  for (auto& c : classes) {
    ValueEntry e{c.rep, c.weight, std::move(c.s), std::nullopt};
    if (c.q) e.rational = *c.q * *inv;
    vs.entries.push_back(std::move(e));
  }
  if (!sort_values) return vs;
  auto enclosure = [&](std::size_t i, int level) {
    const auto& e = vs.entries[i];
    if (e.scaled) return e.scaled->eval(ctx.beta(level));
    return Interval(*e.rational, ctx.precision().bits(level));
  };
  auto exact = [&](std::size_t i, std::size_t j) -> std::optional<std::strong_ordering> {
    const auto& a = vs.entries[i];
    const auto& b = vs.entries[j];
    if (a.scaled) return detail::to_ordering(ctx.sign(ctx.field().sub(*a.scaled, *b.scaled)));
    return detail::to_ordering(sgn(*a.rational - *b.rational));
  };
  auto groups = exact_order(vs.entries.size(), ctx.max_level(), enclosure, exact);
  std::vector<ValueEntry> ordered;
  ordered.reserve(groups.size());
  for (const auto& g : groups) {
    // distinct keys with one value can only come from a reducible modulus
    ValueEntry e = vs.entries[g.front()];
    for (std::size_t k = 1; k < g.size(); ++k) {
      e.multiplicity += vs.entries[g[k]].multiplicity;
      if (vs.entries[g[k]].representative < e.representative) e.representative = vs.entries[g[k]].representative;
    }
    ordered.push_back(std::move(e));
  }
  vs.entries = std::move(ordered);
  vs.sorted = true;
  return vs;
}

/// Exact value of an entry in symbolic mode.
inline FieldElement entry_value(const ValueEntry& e, const BetaContext& ctx, int n) {
  const NumberField& f = ctx.field();
  return f.mul(*e.scaled, detail::field_scales(f, n).inv_pow);
}

/// H^(n) / (n log beta) with H^(n) = n log 2 - 2^-n sum p log p over D_n.
inline Interval entropy_estimate(const BetaContext& ctx, int n) {
  ValueSet vs = distinct_values(ctx, n, false);
  std::map<std::uint64_t, std::uint64_t> histogram;
  for (const auto& e : vs.entries) ++histogram[e.multiplicity];
  const Interval beta = ctx.beta(0);
  const mpfr_prec_t bits = beta.precision();
  Interval sum(Rational(0), bits);
  for (const auto& [p, count] : histogram) {
    if (p == 1) continue;
    Interval term = Interval(Rational(Integer(static_cast<unsigned long>(p))), bits);
    sum = sum + scale(term * log(term), Integer(static_cast<unsigned long>(count)));
  }
  Interval log2 = Interval::log2_const(bits);
  Interval h = scale(log2, Integer(n)) - sum / Interval(Rational(pow2(static_cast<unsigned long>(n))), bits);
  return h / scale(log(beta), Integer(n));
}

struct SeparationResult {
  Interval ratio;                     // (min gap) * beta^n
  std::optional<FieldElement> exact;  // symbolic mode
  Word left;                          // representatives of the closest pair
  Word right;
};

/// Smallest gap between consecutive distinct values of D_n, times beta^n.
inline SeparationResult separation_ratio(const BetaContext& ctx, int n) {
  ValueSet vs = distinct_values(ctx, n, true);
  if (vs.entries.size() < 2) throw std::logic_error("fewer than two distinct values");
  const std::size_t gaps = vs.entries.size() - 1;
  std::vector<std::optional<FieldElement>> exact_gap(gaps);
  std::vector<Rational> rational_gap(ctx.is_symbolic() ? 0 : gaps);
  std::optional<Rational> bn;
  if (auto b = ctx.rational()) bn = pow(*b, static_cast<unsigned long>(n));
  for (std::size_t i = 0; i < gaps; ++i) {
    if (ctx.is_symbolic()) {
      exact_gap[i] = ctx.field().sub(*vs.entries[i + 1].scaled, *vs.entries[i].scaled);
    } else {
      rational_gap[i] = (*vs.entries[i + 1].rational - *vs.entries[i].rational) * *bn;
    }
  }
  auto enclosure = [&](std::size_t i, int level) {
    if (exact_gap[i]) return exact_gap[i]->eval(ctx.beta(level));
    return Interval(rational_gap[i], ctx.precision().bits(level));
  };
  auto exact = [&](std::size_t i, std::size_t j) -> std::optional<std::strong_ordering> {
    if (exact_gap[i]) return detail::to_ordering(ctx.sign(ctx.field().sub(*exact_gap[i], *exact_gap[j])));
    return detail::to_ordering(sgn(rational_gap[i] - rational_gap[j]));
  };
  auto groups = exact_order(gaps, ctx.max_level(), enclosure, exact);
  const std::size_t k = groups.front().front();
  return {enclosure(k, 0), exact_gap[k], vs.entries[k].representative, vs.entries[k + 1].representative};
}

}  // namespace garsia
