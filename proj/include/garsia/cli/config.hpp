#pragma once

// Run configuration and beta specifications shared by the command-line tool
// and the verification suite.

#include <cstdlib>
#include <optional>
#include <string>
#include <string_view>

#include "garsia/algebra/cyclotomic.hpp"
#include "garsia/expansion/beta_context.hpp"
#include "garsia/transitions/transitions.hpp"
#include "garsia/util/parallel.hpp"

namespace garsia {

enum class OutputFormat { text, json, csv };
enum class ModeChoice { automatic, numeric, symbolic };

inline OutputFormat parse_format(std::string_view s) {
  if (s == "text") return OutputFormat::text;
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  throw ParseError("unknown format '" + std::string(s) + "' (text, json, csv)");
}

inline ModeChoice parse_mode(std::string_view s) {
  if (s == "auto") return ModeChoice::automatic;
  if (s == "numeric") return ModeChoice::numeric;
  if (s == "symbolic") return ModeChoice::symbolic;
  throw ParseError("unknown mode '" + std::string(s) + "' (auto, numeric, symbolic)");
}

struct RunConfig {
  int precision_digits = 50;
  unsigned workers = default_workers();
  int cap = 8;
  OutputFormat format = OutputFormat::text;
  ModeChoice mode = ModeChoice::automatic;
  bool long_run = false;
  std::optional<std::string> journal;

  /// Defaults, then GARSIA_PRECISION and GARSIA_WORKERS when set.
  static RunConfig from_env() {
    RunConfig c;
    if (const char* p = std::getenv("GARSIA_PRECISION")) c.precision_digits = parse_positive(p, "GARSIA_PRECISION");
    if (const char* w = std::getenv("GARSIA_WORKERS"))
      c.workers = static_cast<unsigned>(parse_positive(w, "GARSIA_WORKERS"));
    return c;
  }

  void validate() const {
    if (precision_digits < 15) throw std::invalid_argument("precision must be at least 15 digits");
    if (workers < 1) throw std::invalid_argument("worker count must be at least 1");
    if (cap < 1) throw std::invalid_argument("length cap must be positive");
  }

  PrecisionContext precision() const { return PrecisionContext(precision_digits, 4); }

  TransitionOptions transition_options() const {
    TransitionOptions o;
    o.cap = cap;
    o.long_run = long_run;
    o.workers = workers;
    o.precision = precision();
    o.journal = journal;
    return o;
  }

 private:
  static int parse_positive(const char* text, const char* name) {
    char* end = nullptr;
    long v = std::strtol(text, &end, 10);
    if (end == text || *end != '\0' || v < 1 || v > 1'000'000)
      throw std::invalid_argument(std::string(name) + " must be a positive integer");
    return static_cast<int>(v);
  }
};

/// A base given on the command line: a decimal or fraction, or
/// "poly:<polynomial>@(lo,hi)" naming the unique root of the polynomial in
/// the open interval.
struct BetaSpec {
  std::string text;
  std::optional<Rational> rational;
  std::optional<AlgebraicReal> algebraic;

  bool polynomial_rooted() const { return algebraic.has_value(); }
};

/// The same root with its polynomial reduced: square-free, no factor x, no
/// cyclotomic factors. Symbolic arithmetic works modulo this polynomial.
inline AlgebraicReal normalize_root(const AlgebraicReal& a) {
  IntPolynomial p = a.polynomial().square_free_part();
  while (p.degree() > 0 && p[0] == 0) {
    std::vector<Integer> c;
    for (int k = 1; k <= p.degree(); ++k) c.push_back(p[static_cast<std::size_t>(k)]);
    p = IntPolynomial(std::move(c));
  }
  p = cyclotomic_strip(p).square_free_part();
  return AlgebraicReal::certify(p, a.lo(), a.hi());
}

inline BetaSpec parse_beta_spec(std::string_view text) {
  BetaSpec spec;
  spec.text = std::string(text);
  if (text.substr(0, 5) == "poly:") {
    std::string_view rest = text.substr(5);
    auto at = rest.rfind('@');
    if (at == std::string_view::npos) throw ParseError("expected poly:<polynomial>@(lo,hi)");
    IntPolynomial p = parse_polynomial(rest.substr(0, at));
    std::string_view range = rest.substr(at + 1);
    if (range.size() < 5 || range.front() != '(' || range.back() != ')')
      throw ParseError("expected an open interval (lo,hi) after '@'");
    range = range.substr(1, range.size() - 2);
    auto comma = range.find(',');
    if (comma == std::string_view::npos) throw ParseError("expected (lo,hi)");
    Rational lo = parse_rational(range.substr(0, comma));
    Rational hi = parse_rational(range.substr(comma + 1));
    if (!(lo < hi)) throw ParseError("empty interval in '" + spec.text + "'");
    auto roots = isolate_real_roots(p, lo, hi);
    if (roots.size() != 1)
      throw ParseError(p.to_string() + " has " + std::to_string(roots.size()) + " roots in (" + to_string(lo) + ", " +
                       to_string(hi) + "), need exactly one");
    spec.algebraic = normalize_root(roots.front());
    if (auto q = spec.algebraic->as_rational()) spec.rational = *q;
    return spec;
  }
  spec.rational = parse_rational(text);
  return spec;
}

/// Auto mode is symbolic for polynomial-rooted specs and numeric otherwise.
inline BetaContext make_context(const BetaSpec& spec, const RunConfig& cfg) {
  const PrecisionContext prec = cfg.precision();
  ModeChoice mode = cfg.mode;
  if (mode == ModeChoice::automatic) mode = spec.polynomial_rooted() ? ModeChoice::symbolic : ModeChoice::numeric;
  if (mode == ModeChoice::symbolic) {
    if (!spec.algebraic) throw std::invalid_argument("symbolic mode needs a poly:<polynomial>@(lo,hi) base");
    return BetaContext::symbolic(*spec.algebraic, prec);
  }
  if (spec.algebraic) return BetaContext::numeric(*spec.algebraic, prec);
  return BetaContext::numeric(*spec.rational, prec);
}

}  // namespace garsia
