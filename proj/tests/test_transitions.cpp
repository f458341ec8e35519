#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <string>

#include <gtest/gtest.h>

#include "garsia/cli/emit.hpp"
#include "garsia/transitions/sweep.hpp"
#include "oracles.hpp"

using namespace garsia;

namespace {

IntPolynomial P(const char* s) { return parse_polynomial(s); }

TransitionOptions quick(unsigned workers = 1) {
  TransitionOptions o;
  o.workers = workers;
  o.classify = false;
  return o;
}

// (x - 1) s_w(x) + [side U], the critical value scaled by x^n (x - 1)
IntPolynomial scaled_critical(std::uint64_t bits, int n, bool upper) {
  std::vector<Integer> c(static_cast<std::size_t>(n), 0);
  for (int k = 1; k <= n; ++k)
    if (bits >> (n - k) & 1U) c[static_cast<std::size_t>(n - k)] = 1;
  IntPolynomial s(std::move(c));
  return s * IntPolynomial{-1, 1} + IntPolynomial{upper ? 1 : 0};
}

// every root in (1, 2) of every difference of two critical values, deduplicated
std::vector<AlgebraicReal> unpruned_roots(int n) {
  std::vector<IntPolynomial> crit;
  for (std::uint64_t w = 0; w < (std::uint64_t{1} << n); ++w)
    for (bool u : {false, true}) crit.push_back(scaled_critical(w, n, u));
  std::set<std::string> seen;
  std::vector<AlgebraicReal> roots;
  for (std::size_t i = 0; i < crit.size(); ++i)
    for (std::size_t j = i + 1; j < crit.size(); ++j) {
      IntPolynomial d = crit[i] - crit[j];
      if (d.degree() < 1) continue;
      if (!seen.insert(d.primitive().to_list_string()).second) continue;
      for (auto& r : isolate_real_roots(d.primitive(), Rational(1), Rational(2))) roots.push_back(r);
    }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// rational strictly inside (a, b), uniformly placed between separated enclosures
Rational random_inside(const AlgebraicReal& a, const AlgebraicReal& b, std::mt19937_64& rng) {
  Rational eps = (b.hi() - a.lo()) / 8;
  for (;;) {
    Rational ahi = a.refine(eps).second, blo = b.refine(eps).first;
    if (ahi < blo) return oracle::random_rational(rng, ahi, blo);
    eps /= 16;
  }
}

}  // namespace

TEST(Candidates, LengthOneHasOnlyOnePair) {
  auto pairs = candidate_pairs(1);
  ASSERT_EQ(pairs.size(), 1u);
  EXPECT_EQ(pairs[0].to_string(), "(0)_U = (1)_L");
}

TEST(Candidates, LengthTwoPairs) {
  std::set<std::string> got;
  for (const auto& p : candidate_pairs(2)) got.insert(p.to_string());
  EXPECT_EQ(got.size(), 8u);
  // each candidate polynomial is the primitive difference of its two critical values
  for (const auto& p : candidate_pairs(2)) {
    IntPolynomial d = scaled_critical(p.word_b.bits(), 2, p.side_b == Side::U) -
                      scaled_critical(p.word_a.bits(), 2, p.side_a == Side::U);
    EXPECT_EQ(pair_polynomial(p), d.primitive()) << p.to_string();
  }
  // the roots in (1,2) are exactly sqrt 2 and tau
  std::set<std::string> polys;
  for (const auto& p : candidate_pairs(2))
    for (const auto& r : isolate_real_roots(pair_polynomial(p), Rational(1), Rational(2)))
      polys.insert(r.polynomial().to_string());
  EXPECT_EQ(polys, (std::set<std::string>{"x^2-2", "x^2-x-1"}));
}

TEST(Candidates, PatternIdRoundTripAndSourceCounts) {
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t sources = 0, patterns = 0;
    for_each_pattern(n, [&](const EquationPattern& p) {
      EXPECT_EQ(EquationPattern::from_id(n, p.id()).id(), p.id());
      EXPECT_EQ(p.source_count(), std::uint64_t{1} << p.zeros());
      // every source pair shares the pattern polynomial
      for (std::uint64_t fill = 0; fill < p.source_count(); ++fill)
        EXPECT_EQ(pair_polynomial(p.pair(fill)), p.polynomial());
      sources += p.source_count();
      ++patterns;
    });
    std::uint64_t listed = 0;
    for_each_candidate_pair(n, [&](const EquationPair&) { ++listed; });
    EXPECT_EQ(listed, sources) << n;
    EXPECT_GT(patterns, 0u);
  }
}

TEST(HoldsOn, DisjointIntervalsWithExactEndpoints) {
  EquationPair p{Word::parse("01111"), Side::L, Word::parse("10001"), Side::U};
  auto parts = holds_on(p, Rational(1), Rational(2));
  ASSERT_EQ(parts.size(), 2u);
  AlgebraicReal sigma = isolate_real_roots(P("x^3-x^2-1"), Rational(1), Rational(2)).at(0);
  AlgebraicReal tau = isolate_real_roots(P("x^2-x-1"), Rational(1), Rational(2)).at(0);
  EXPECT_EQ(parts[0].left, AlgebraicReal::from_rational(Rational(1)));
  EXPECT_EQ(parts[0].right, sigma);
  EXPECT_EQ(parts[1].left, tau);
  EXPECT_EQ(parts[1].right, AlgebraicReal::from_rational(Rational(2)));
}

TEST(HoldsOn, AgreesWithDirectComparisonAtSamples) {
  std::mt19937_64 rng(4);
  auto pairs = candidate_pairs(4);
  for (std::size_t k = 0; k < pairs.size(); k += 7) {
    const auto& p = pairs[k];
    auto parts = holds_on(p, Rational(1), Rational(2));
    for (int i = 0; i < 20; ++i) {
      Rational beta = oracle::random_rational(rng, Rational(1), Rational(2));
      Rational a = oracle::word_value(p.word_a.bits(), 4, beta) + (p.side_a == Side::U ? oracle::tail(4, beta) : Rational(0));
      Rational b = oracle::word_value(p.word_b.bits(), 4, beta) + (p.side_b == Side::U ? oracle::tail(4, beta) : Rational(0));
      bool inside = false;
      AlgebraicReal x = AlgebraicReal::from_rational(beta);
      for (const auto& part : parts) inside = inside || (part.left < x && x < part.right);
      if (a != b) {
        EXPECT_EQ(inside, a < b) << p.to_string() << " at " << to_string(beta);
      }
    }
  }
}

TEST(Transitions, LengthOneIsEmpty) { EXPECT_TRUE(transitions(1, Rational(1), Rational(2), quick()).empty()); }

TEST(Transitions, LengthTwoIsSqrtTwoAndTau) {
  auto pts = transitions(2);
  ASSERT_EQ(pts.size(), 2u);
  EXPECT_EQ(pts[0].value.polynomial(), P("x^2-2"));
  EXPECT_EQ(pts[1].value.polynomial(), P("x^2-x-1"));
  ASSERT_TRUE(pts[0].pisot && pts[1].pisot);
  EXPECT_EQ(pts[0].pisot->verdict, Verdict::no);
  EXPECT_EQ(pts[1].pisot->verdict, Verdict::yes);
  auto parts = partition(pts, Rational(1), Rational(2));
  ASSERT_EQ(parts.size(), 3u);
  std::vector<std::uint64_t> m;
  for (const auto& s : parts) m.push_back(max_overlap(BetaContext::numeric(s.midpoint), 2).m);
  EXPECT_EQ(m, (std::vector<std::uint64_t>{4, 3, 2}));
}

TEST(Transitions, MatchUnprunedRootsForShortWords) {
  for (int n = 1; n <= 4; ++n) {
    auto pts = transitions(n, Rational(1), Rational(2), quick());
    auto all = unpruned_roots(n);
    ASSERT_EQ(pts.size(), all.size()) << n;
    for (std::size_t i = 0; i < all.size(); ++i) EXPECT_EQ(pts[i].value, all[i]);
  }
}

TEST(Transitions, SourcesVanishAtTheirPoint) {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& p : transitions(n, Rational(1), Rational(2), quick())) {
      ASSERT_FALSE(p.sources.empty());
      EXPECT_GE(p.sources_count, p.sources.size());
      for (const auto& s : p.sources) EXPECT_TRUE(p.value.is_root_of(signed_pair_polynomial(s))) << s.to_string();
      EXPECT_TRUE(compare(p.value, AlgebraicReal::from_rational(Rational(1))) > 0);
      EXPECT_TRUE(compare(p.value, AlgebraicReal::from_rational(Rational(2))) < 0);
    }
  }
}

TEST(Transitions, StrictlyAscending) {
  auto pts = transitions(5, Rational(1), Rational(2), quick());
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) EXPECT_TRUE(compare(pts[i].value, pts[i + 1].value) < 0);
}

TEST(Transitions, MnIsConstantBetweenTransitions) {
  std::mt19937_64 rng(12);
  for (int n = 1; n <= 6; ++n) {
    auto parts = partition(transitions(n, Rational(1), Rational(2), quick()), Rational(1), Rational(2));
    for (const auto& s : parts) {
      const std::uint64_t m = oracle::max_open(s.midpoint, n);
      for (int i = 0; i < 5; ++i) {
        Rational b = random_inside(s.left, s.right, rng);
        EXPECT_EQ(oracle::max_open(b, n), m) << "n=" << n << " beta=" << to_string(b);
      }
    }
  }
}

TEST(Transitions, NonMonotoneNearTheTribonacciNumber) {
  auto rep = sweep_report(5, parse_rational("1.8"), parse_rational("1.9"), quick());
  bool up = false, down = false;
  for (std::size_t i = 0; i + 1 < rep.rows.size(); ++i) {
    up = up || rep.rows[i + 1].m_n > rep.rows[i].m_n;
    down = down || rep.rows[i + 1].m_n < rep.rows[i].m_n;
  }
  EXPECT_TRUE(up && down);
}

TEST(Transitions, CapNeedsLongRun) {
  TransitionOptions o = quick();
  o.cap = 3;
  EXPECT_THROW(transitions(4, Rational(1), Rational(2), o), CapExceeded);
  o.long_run = true;
  EXPECT_NO_THROW(transitions(4, Rational(1), Rational(2), o));
}

TEST(Transitions, IndependentOfWorkerCount) {
  auto a = transitions(5, Rational(1), Rational(2), [] { auto o = quick(1); o.classify = true; return o; }());
  auto b = transitions(5, Rational(1), Rational(2), [] { auto o = quick(4); o.classify = true; return o; }());
  EXPECT_EQ(transitions_json(a, 20), transitions_json(b, 20));
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].sources, b[i].sources);
    EXPECT_EQ(a[i].pattern_count, b[i].pattern_count);
  }
  EXPECT_EQ(sweep_csv(sweep_report(4, Rational(1), Rational(2), quick(1)), 12),
            sweep_csv(sweep_report(4, Rational(1), Rational(2), quick(3)), 12));
}

TEST(Transitions, JournalResumesAfterInterruption) {
  const auto path = std::filesystem::temp_directory_path() / "garsia_journal_test.jsonl";
  std::filesystem::remove(path);
  TransitionOptions o = quick();
  o.journal = path.string();
  auto first = transitions(7, Rational(1), Rational(2), o);

  std::vector<std::string> lines;
  {
    std::ifstream in(path);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  ASSERT_GE(lines.size(), 3u);  // header and at least two units
  {
    // drop the last unit and leave a torn line, as after a kill
    std::ofstream out(path, std::ios::trunc);
    for (std::size_t i = 0; i + 1 < lines.size(); ++i) out << lines[i] << '\n';
    out << lines.back().substr(0, lines.back().size() / 2);
  }
  auto resumed = transitions(7, Rational(1), Rational(2), o);
  EXPECT_EQ(transitions_json(first, 20), transitions_json(resumed, 20));

  TransitionOptions other = o;
  EXPECT_THROW(transitions(6, Rational(1), Rational(2), other), std::runtime_error);  // header mismatch
  std::filesystem::remove(path);
}

TEST(Partition, MidpointsAreShortAndStrictlyInside) {
  auto pts = transitions(5, Rational(1), Rational(2), quick());
  auto parts = partition(pts, Rational(1), Rational(2));
  ASSERT_EQ(parts.size(), pts.size() + 1);
  for (const auto& s : parts) {
    AlgebraicReal mid = AlgebraicReal::from_rational(s.midpoint);
    EXPECT_TRUE(compare(s.left, mid) < 0);
    EXPECT_TRUE(compare(mid, s.right) < 0);
    // a terminating decimal
    Integer den = s.midpoint.get_den();
    while (den % 2 == 0) den /= 2;
    while (den % 5 == 0) den /= 5;
    EXPECT_EQ(den, 1);
  }
  EXPECT_EQ(short_decimal_between(AlgebraicReal::from_rational(Rational(1)),
                                  AlgebraicReal::from_rational(Rational(2))),
            Rational(3, 2));
}

TEST(Sweep, BoundsAtEndpoints) {
  auto rep = sweep_report(3, Rational(1), Rational(2), quick());
  ASSERT_FALSE(rep.rows.empty());
  EXPECT_FALSE(rep.rows.front().bound_left.has_value());  // beta = 1
  for (const auto& r : rep.rows) {
    ASSERT_TRUE(r.bound_right && r.bound_min);
    if (r.bound_left) {
      EXPECT_LE(compare_lower(*r.bound_min, *r.bound_left), 0);
    }
    EXPECT_LE(compare_lower(*r.bound_min, *r.bound_right), 0);
    EXPECT_EQ(r.m_n, oracle::max_open(r.interval.midpoint, 3));
  }
  ASSERT_TRUE(rep.bound_min);
  EXPECT_EQ(compare_lower(*rep.bound_min, *rep.rows[rep.argmin].bound_min), 0);
}
