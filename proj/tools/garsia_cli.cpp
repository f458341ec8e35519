// garsia: m_n counts, entropy lower bounds, transition points and Pisot checks
// from the command line.

#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "garsia/cli/config.hpp"
#include "garsia/cli/emit.hpp"
#include "garsia/entropy/bounds.hpp"
#include "garsia/expansion/growth.hpp"
#include "garsia/expansion/value_set.hpp"
#include "garsia/transitions/sweep.hpp"
#include "garsia/verify/acceptance.hpp"

using namespace garsia;
using nlohmann::json;

namespace {

struct Globals {
  RunConfig cfg = RunConfig::from_env();
  std::string format = "text";
  std::string mode = "auto";
  int digits = 10;
};

struct Range {
  std::string lo = "1";
  std::string hi = "2";
};

void add_range(CLI::App* cmd, Range& r) {
  cmd->add_option("--lo", r.lo, "left end of the beta range (exclusive)")->capture_default_str();
  cmd->add_option("--hi", r.hi, "right end of the beta range (exclusive)")->capture_default_str();
}

int cmd_mn(const Globals& g, const std::string& beta_text, int n, bool profile) {
  BetaSpec spec = parse_beta_spec(beta_text);
  BetaContext ctx = make_context(spec, g.cfg);
  OverlapProfile prof = max_overlap(ctx, n);
  Interval wl = critical_value(prof, prof.witness, ctx);
  Interval wr = critical_value(prof, prof.witness + 1, ctx);
  switch (g.cfg.format) {
    case OutputFormat::csv:
      std::cout << profile_csv(prof, ctx, g.digits);
      break;
    case OutputFormat::json: {
      json j{{"beta", ctx.describe()},
             {"n", n},
             {"m_n", prof.m},
             {"mode", to_string(ctx.mode())},
             {"witness", {certified_decimal(wl, g.digits), certified_decimal(wr, g.digits)}},
             {"classes", prof.class_count}};
      if (profile) {
        json rows = json::array();
        for (std::size_t i = 0; i < prof.segments(); ++i)
          rows.push_back({{"left", certified_decimal(critical_value(prof, i, ctx), g.digits)},
                          {"right", certified_decimal(critical_value(prof, i + 1, ctx), g.digits)},
                          {"count", prof.open_counts[i]}});
        j["profile"] = rows;
      }
      std::cout << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::text:
      std::cout << "beta    " << ctx.describe() << " (" << to_string(ctx.mode()) << ")\n"
                << "m_" << n << "     " << prof.m << '\n'
                << "witness (" << certified_decimal(wl, g.digits) << ", " << certified_decimal(wr, g.digits) << ")\n";
      if (profile) std::cout << '\n' << profile_csv(prof, ctx, g.digits);
      break;
  }
  return 0;
}

int cmd_bound(const Globals& g, const std::string& beta_text, int n) {
  BetaSpec spec = parse_beta_spec(beta_text);
  BetaContext ctx = make_context(spec, g.cfg);
  BoundResult b = compute_bound(ctx, n);
  switch (g.cfg.format) {
    case OutputFormat::json:
      std::cout << bound_json(b, g.digits).dump(2) << '\n';
      break;
    case OutputFormat::csv:
      std::cout << "beta,n,m_n,bound_lower_certified,growth_upper,mode\n"
                << csv_field(b.beta) << ',' << b.n << ',' << b.m_n << ',' << b.bound_lower(g.digits) << ','
                << b.growth_upper_decimal(g.digits) << ',' << to_string(b.mode) << '\n';
      break;
    case OutputFormat::text:
      std::cout << "beta    " << b.beta << " (" << to_string(b.mode) << ")\n"
                << "m_" << n << "     " << b.m_n << '\n'
                << "H_beta >= " << b.bound_lower(g.digits) << '\n'
                << "M_beta <= " << b.growth_upper_decimal(g.digits) << '\n';
      break;
  }
  return 0;
}

int cmd_transitions(const Globals& g, int n, const Range& r) {
  auto points = transitions(n, parse_rational(r.lo), parse_rational(r.hi), g.cfg.transition_options());
  switch (g.cfg.format) {
    case OutputFormat::json:
      std::cout << transitions_json(points, g.digits);
      break;
    case OutputFormat::csv:
      std::cout << "polynomial,lo,hi,approx_value,pisot,sources_count\n";
      for (const auto& p : points)
        std::cout << csv_field(p.value.polynomial().to_string()) << ',' << to_string(p.value.lo()) << ','
                  << to_string(p.value.hi()) << ',' << p.value.decimal(g.digits) << ','
                  << (p.pisot ? to_string(p.pisot->verdict) : "unclassified") << ',' << p.sources_count << '\n';
      break;
    case OutputFormat::text:
      std::cout << points.size() << " transition points of m_" << n << " in (" << r.lo << ", " << r.hi << ")\n";
      for (const auto& p : points) {
        std::cout << std::setw(g.digits + 4) << std::left << p.value.decimal(g.digits) << std::setw(14)
                  << (p.pisot ? to_string(p.pisot->verdict) : "unclassified") << p.value.polynomial().to_string();
        if (!p.sources.empty()) std::cout << "   " << p.sources.front().to_string();
        if (p.sources_count > 1) std::cout << " (+" << p.sources_count - 1 << ")";
        std::cout << '\n';
      }
      break;
  }
  return 0;
}

int cmd_sweep(const Globals& g, int n, const Range& r) {
  auto opt = g.cfg.transition_options();
  opt.classify = false;
  SweepReport rep = sweep_report(n, parse_rational(r.lo), parse_rational(r.hi), opt);
  switch (g.cfg.format) {
    case OutputFormat::csv:
    case OutputFormat::text:
      std::cout << sweep_csv(rep, g.digits);
      if (g.cfg.format == OutputFormat::text && rep.bound_min)
        std::cout << "\nsmallest bound " << rep.bound_min->lower_decimal(g.digits) << " on ("
                  << rep.rows[rep.argmin].interval.left.decimal(g.digits) << ", "
                  << rep.rows[rep.argmin].interval.right.decimal(g.digits) << ")\n";
      break;
    case OutputFormat::json: {
      json rows = json::array();
      for (const auto& row : rep.rows)
        rows.push_back({{"left", row.interval.left.decimal(g.digits)},
                        {"right", row.interval.right.decimal(g.digits)},
                        {"midpoint", to_string(row.interval.midpoint)},
                        {"m_n", row.m_n},
                        {"bound_left", bound_cell(row.bound_left, g.digits)},
                        {"bound_right", bound_cell(row.bound_right, g.digits)},
                        {"bound_min", bound_cell(row.bound_min, g.digits)}});
      std::cout << json{{"n", n}, {"transitions", rep.cuts.size()}, {"rows", rows}}.dump(2) << '\n';
      break;
    }
  }
  return 0;
}

int cmd_entropy(const Globals& g, const std::string& beta_text, int n_min, int n_max) {
  BetaSpec spec = parse_beta_spec(beta_text);
  BetaContext ctx = make_context(spec, g.cfg);
  if (n_min < 1 || n_max < n_min) throw std::invalid_argument("need 1 <= n-min <= n-max");
  json arr = json::array();
  if (g.cfg.format != OutputFormat::json) std::cout << "n,estimate\n";
  for (int n = n_min; n <= n_max; ++n) {
    std::string v = certified_decimal(entropy_estimate(ctx, n), g.digits);
    if (g.cfg.format == OutputFormat::json) {
      arr.push_back({{"n", n}, {"estimate", v}});
    } else {
      std::cout << n << ',' << v << '\n' << std::flush;
    }
  }
  if (g.cfg.format == OutputFormat::json) std::cout << json{{"beta", ctx.describe()}, {"estimates", arr}}.dump(2) << '\n';
  return 0;
}

int cmd_multinacci(const Globals& g, unsigned m_min, unsigned m_max) {
  if (m_min < 2 || m_max < m_min) throw std::invalid_argument("need 2 <= m-min <= m-max");
  const mpfr_prec_t bits = g.cfg.precision().bits(0);
  json arr = json::array();
  if (g.cfg.format != OutputFormat::json) std::cout << "m,tau_m,growth,bound,reference_entropy\n";
  for (unsigned m = m_min; m <= m_max; ++m) {
    MultinacciGrowth gr = multinacci_growth(m, bits);
    std::string tau = multinacci(m).decimal(g.digits);
    std::string growth = gr.exact + " = " + certified_decimal(gr.value, g.digits);
    std::string bound = certified_decimal(multinacci_bound(m, bits), g.digits);
    std::string ref_text;
    if (m <= 5) ref_text = std::to_string(reference_entropy(m)).substr(0, 6);
    if (g.cfg.format == OutputFormat::json) {
      json row{{"m", m}, {"tau_m", tau}, {"growth", growth}, {"bound", bound}};
      if (!ref_text.empty()) row["reference_entropy"] = ref_text;
      arr.push_back(row);
    } else {
      std::cout << m << ',' << tau << ',' << growth << ',' << bound << ',' << ref_text << '\n';
    }
  }
  if (g.cfg.format == OutputFormat::json) std::cout << arr.dump(2) << '\n';
  return 0;
}

int cmd_pisot(const Globals& g, const std::string& target) {
  PisotResult res;
  if (target.rfind("poly:", 0) == 0) {
    res = is_pisot(*parse_beta_spec(target).algebraic, g.cfg.precision());
  } else {
    res = is_pisot(parse_polynomial(target), g.cfg.precision());
  }
  json cyc = json::array();
  for (auto k : res.cyclotomic) cyc.push_back(k);
  switch (g.cfg.format) {
    case OutputFormat::json: {
      json j{{"input", target},
             {"pisot", to_string(res.verdict)},
             {"certificate", res.stripped.to_string()},
             {"cyclotomic", cyc},
             {"reason", res.reason}};
      if (res.root) j["root"] = res.root->decimal(g.digits);
      std::cout << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::csv:
      std::cout << "input,pisot,certificate,root,reason\n"
                << csv_field(target) << ',' << to_string(res.verdict) << ',' << csv_field(res.stripped.to_string())
                << ',' << (res.root ? res.root->decimal(g.digits) : "") << ',' << csv_field(res.reason) << '\n';
      break;
    case OutputFormat::text:
      std::cout << "pisot   " << to_string(res.verdict) << '\n';
      if (res.root) std::cout << "root    " << res.root->decimal(g.digits) << '\n';
      std::cout << "factor  " << res.stripped.to_string() << '\n';
      if (!res.cyclotomic.empty()) {
        std::cout << "removed";
        for (auto k : res.cyclotomic) std::cout << " Phi_" << k;
        std::cout << '\n';
      }
      if (!res.reason.empty()) std::cout << "reason  " << res.reason << '\n';
      break;
  }
  return 0;
}

int cmd_growth(const Globals& g, const std::string& beta_text, const std::string& pre, const std::string& period,
               const std::string& x_text, int n_max) {
  BetaSpec spec = parse_beta_spec(beta_text);
  RunConfig cfg = g.cfg;
  cfg.mode = ModeChoice::symbolic;
  BetaContext ctx = make_context(spec, cfg);
  Point x;
  std::string label;
  if (!x_text.empty()) {
    x = parse_rational(x_text);
    label = x_text;
  } else {
    if (period.empty()) throw std::invalid_argument("give --period (and optionally --pre) or --x");
    x = value_of_periodic(Word::parse(pre), Word::parse(period), ctx);
    label = pre + "(" + period + ")^inf";
  }
  auto counts = growth_profile(x, ctx, n_max);
  json arr = json::array();
  if (g.cfg.format != OutputFormat::json) std::cout << "n,count,root\n";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    Interval r = root(Interval(Rational(Integer(static_cast<unsigned long>(counts[i]))), ctx.beta(0).precision()),
                      static_cast<unsigned long>(n));
    std::string rv = certified_decimal(r, g.digits);
    if (g.cfg.format == OutputFormat::json) {
      arr.push_back({{"n", n}, {"count", counts[i]}, {"root", rv}});
    } else {
      std::cout << n << ',' << counts[i] << ',' << rv << '\n';
    }
  }
  if (g.cfg.format == OutputFormat::json)
    std::cout << json{{"beta", ctx.describe()}, {"point", label}, {"profile", arr}}.dump(2) << '\n';
  return 0;
}

int cmd_verify(const Globals& g, const std::vector<int>& only) {
  AcceptanceOptions opt;
  opt.precision = g.cfg.precision();
  opt.workers = g.cfg.workers;
  auto results = run_acceptance(std::cout, opt, only);
  std::size_t failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Globals g;
  CLI::App app{"Garsia entropy lower bounds via beta-expansion overlap counts"};
  app.require_subcommand(1);
  app.add_option("--precision", g.cfg.precision_digits, "working precision in decimal digits")->capture_default_str();
  app.add_option("--workers", g.cfg.workers, "worker threads")->capture_default_str();
  app.add_option("--cap", g.cfg.cap, "largest word length without --long-run")->capture_default_str();
  app.add_option("--format", g.format, "text, json or csv")->capture_default_str();
  app.add_option("--mode", g.mode, "auto, numeric or symbolic")->capture_default_str();
  app.add_option("--digits", g.digits, "decimal places printed")->capture_default_str();
  app.add_flag("--long-run", g.cfg.long_run, "allow lengths above the cap");
  app.add_option("--journal", g.cfg.journal, "resumable JSONL journal for transition searches");

  std::string beta;
  int n = 0;
  bool profile = false;
  Range range;

  auto* mn = app.add_subcommand("mn", "maximal overlap count m_n(beta)");
  mn->add_option("beta", beta, "decimal, fraction, or poly:<p>@(lo,hi)")->required();
  mn->add_option("n", n, "word length")->required();
  mn->add_flag("--profile", profile, "print every segment count");

  auto* bound = app.add_subcommand("bound", "certified lower bound for H_beta");
  bound->add_option("beta", beta, "decimal, fraction, or poly:<p>@(lo,hi)")->required();
  bound->add_option("n", n, "word length")->required();

  auto* trans = app.add_subcommand("transitions", "points where m_n changes");
  trans->add_option("n", n, "word length")->required();
  add_range(trans, range);

  auto* sweep = app.add_subcommand("sweep", "m_n and the bound on each subinterval between transitions");
  sweep->add_option("n", n, "word length")->required();
  add_range(sweep, range);

  int n_min = 2;
  auto* entropy = app.add_subcommand("entropy-estimate", "finite-n entropy estimates from the distinct values");
  entropy->add_option("beta", beta, "fraction or poly:<p>@(lo,hi)")->required();
  entropy->add_option("n", n, "largest length")->required();
  entropy->add_option("--n-min", n_min, "smallest length")->capture_default_str();

  unsigned m_min = 2, m_max = 5;
  auto* multi = app.add_subcommand("multinacci", "closed-form bounds for the multinacci numbers");
  multi->add_option("--m-min", m_min)->capture_default_str();
  multi->add_option("--m-max", m_max)->capture_default_str();

  std::string target;
  auto* pisot = app.add_subcommand("pisot-check", "decide whether a polynomial or root is Pisot");
  pisot->add_option("target", target, "polynomial, or poly:<p>@(lo,hi) for a specific root")->required();

  std::string pre, period, x_text;
  auto* growth = app.add_subcommand("growth", "#E_n(x) at an eventually periodic point");
  growth->add_option("beta", beta, "poly:<p>@(lo,hi) or fraction")->required();
  growth->add_option("n", n, "largest length")->required();
  growth->add_option("--pre", pre, "preperiod digits");
  growth->add_option("--period", period, "period digits");
  growth->add_option("--x", x_text, "a rational point instead of a periodic one");

  std::vector<int> only;
  auto* verify = app.add_subcommand("verify", "run the acceptance checks");
  verify->add_option("--only", only, "criterion numbers to run");

  CLI11_PARSE(app, argc, argv);

  try {
    g.cfg.format = parse_format(g.format);
    g.cfg.mode = parse_mode(g.mode);
    g.cfg.validate();
    if (g.digits < 0 || g.digits > g.cfg.precision_digits)
      throw std::invalid_argument("digits must lie between 0 and the precision");
    if (*mn) return cmd_mn(g, beta, n, profile);
    if (*bound) return cmd_bound(g, beta, n);
    if (*trans) return cmd_transitions(g, n, range);
    if (*sweep) return cmd_sweep(g, n, range);
    if (*entropy) return cmd_entropy(g, beta, n_min, n);
    if (*multi) return cmd_multinacci(g, m_min, m_max);
    if (*pisot) return cmd_pisot(g, target);
    if (*growth) return cmd_growth(g, beta, pre, period, x_text, n);
    if (*verify) return cmd_verify(g, only);
  } catch (const IndeterminateOrdering& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "the numeric run could not order two critical values; rerun with --mode symbolic and a "
                 "poly:<p>@(lo,hi) base, or raise --precision\n";
    return 3;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << " (--long-run, or raise --cap)\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
