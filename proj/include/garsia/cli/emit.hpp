#pragma once

// CSV and JSON renderings of profiles, transition lists, sweeps and bounds.

#include <sstream>
#include <string>

#include <json.hpp>

#include "garsia/entropy/bounds.hpp"
#include "garsia/expansion/overlap.hpp"
#include "garsia/transitions/sweep.hpp"

namespace garsia {

/// Rounds both ends of the enclosure to nearest and drops places until they
/// agree, so the printed digits are right for every point of the enclosure.
inline std::string certified_decimal(const Interval& v, int digits) {
  for (int d = digits; d >= 0; --d) {
    std::string lo = to_decimal(v.lower_rational(), d), hi = to_decimal(v.upper_rational(), d);
    if (lo == hi) return lo;
  }
  return "[" + v.lower_decimal(digits) + "," + v.upper_decimal(digits) + "]";
}

inline std::string certified_decimal(const AlgebraicReal& a, int digits) { return a.decimal(digits); }

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// One row per open segment between consecutive distinct critical values.
inline std::string profile_csv(const OverlapProfile& prof, const BetaContext& ctx, int digits) {
  std::ostringstream os;
  os << "left,right,count,left_word,right_word";
  if (ctx.is_symbolic()) os << ",left_exact,right_exact";
  os << '\n';
  for (std::size_t i = 0; i < prof.segments(); ++i) {
    const auto& a = prof.points[i];
    const auto& b = prof.points[i + 1];
    os << certified_decimal(critical_value(prof, i, ctx), digits) << ','
       << certified_decimal(critical_value(prof, i + 1, ctx), digits) << ',' << prof.open_counts[i] << ','
       << csv_field(a.word.to_string() + "_" + to_string(a.side)) << ','
       << csv_field(b.word.to_string() + "_" + to_string(b.side));
    if (ctx.is_symbolic())
      os << ',' << csv_field(critical_value_exact(prof, i, ctx)->to_string("beta")) << ','
         << csv_field(critical_value_exact(prof, i + 1, ctx)->to_string("beta"));
    os << '\n';
  }
  return os.str();
}

inline nlohmann::json transition_json(const TransitionPoint& p, int digits) {
  nlohmann::json j;
  j["polynomial"] = p.value.polynomial().to_string();
  j["isolating_interval"] = {to_string(p.value.lo()), to_string(p.value.hi())};
  j["approx_value"] = p.value.decimal(digits);
  j["pisot"] = p.pisot ? to_string(p.pisot->verdict) : "unclassified";
  j["sources_count"] = p.sources_count;
  return j;
}

inline std::string transitions_json(const std::vector<TransitionPoint>& points, int digits) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& p : points) arr.push_back(transition_json(p, digits));
  return arr.dump(2) + "\n";
}

inline std::string bound_cell(const std::optional<Interval>& b, int digits) {
  return b ? b->lower_decimal(digits) : std::string("inf");
}

inline std::string sweep_csv(const SweepReport& rep, int digits) {
  std::ostringstream os;
  os << "left,right,midpoint,m_n,bound_left,bound_right,bound_min\n";
  for (const auto& r : rep.rows) {
    os << r.interval.left.decimal(digits) << ',' << r.interval.right.decimal(digits) << ','
       << to_string(r.interval.midpoint) << ',' << r.m_n << ',' << bound_cell(r.bound_left, digits) << ','
       << bound_cell(r.bound_right, digits) << ',' << bound_cell(r.bound_min, digits) << '\n';
  }
  return os.str();
}

inline nlohmann::json bound_json(const BoundResult& b, int digits) {
  return {{"beta", b.beta},
          {"n", b.n},
          {"m_n", b.m_n},
          {"bound_lower_certified", b.bound_lower(digits)},
          {"growth_upper", b.growth_upper_decimal(digits)},
          {"mode", to_string(b.mode)}};
}

}  // namespace garsia
