#pragma once

// Transition points of m_n on a range of beta: the roots of the candidate
// pair polynomials, merged exactly and classified.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "garsia/algebra/cyclotomic.hpp"
#include "garsia/algebra/pisot.hpp"
#include "garsia/transitions/equations.hpp"
#include "garsia/util/parallel.hpp"

namespace garsia {

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TransitionOptions {
  int cap = 8;
  bool long_run = false;
  unsigned workers = default_workers();
  PrecisionContext precision{};
  std::optional<std::string> journal;  // JSONL file, resumed when present
  std::size_t stored_sources = 32;     // representatives kept per point
  bool classify = true;                // run the Pisot test on each point
};

struct TransitionPoint {
  AlgebraicReal value;               // defined by the gcd of its source polynomials
  std::vector<EquationPair> sources; // one representative per pattern, truncated
  std::uint64_t sources_count = 0;   // all source pairs
  std::size_t pattern_count = 0;
  std::optional<PisotResult> pisot;
};

namespace detail {

struct PolyGroup {
  IntPolynomial poly;
  std::vector<std::uint64_t> patterns;  // ascending ids, truncated
  std::uint64_t sources = 0;
  std::size_t pattern_count = 0;
};

inline void absorb(PolyGroup& into, const PolyGroup& from, std::size_t stored) {
  into.sources += from.sources;
  into.pattern_count += from.pattern_count;
  for (auto id : from.patterns) {
    if (into.patterns.size() >= stored) break;
    into.patterns.push_back(id);
  }
}

/// Distinct pair polynomials of length n, sorted by their coefficient list.
inline std::vector<PolyGroup> collect_polynomials(int n, unsigned workers, std::size_t stored) {
  const std::uint64_t total = pow3(n);
  const std::uint64_t chunks = std::min<std::uint64_t>(total, 729);
  auto partial = parallel_map<std::unordered_map<std::string, PolyGroup>>(chunks, workers, [&](std::size_t c) {
    std::unordered_map<std::string, PolyGroup> local;
    const std::uint64_t begin = total * c / chunks, end = total * (c + 1) / chunks;
    for_each_pattern(n, begin, end, [&](const EquationPattern& p) {
      IntPolynomial poly = p.polynomial();
      auto [it, fresh] = local.try_emplace(poly.to_list_string());
      PolyGroup& g = it->second;
      if (fresh) g.poly = std::move(poly);
      g.sources += p.source_count();
      ++g.pattern_count;
      if (g.patterns.size() < stored) g.patterns.push_back(p.id());
    });
    return local;
  });
  std::map<std::string, PolyGroup> merged;
  for (auto& local : partial) {
    // chunk order keeps pattern ids ascending within each group
    std::vector<std::pair<std::string, PolyGroup>> items(local.begin(), local.end());
    for (auto& [key, g] : items) {
      auto [it, fresh] = merged.try_emplace(key);
      if (fresh) {
        it->second = std::move(g);
      } else {
        absorb(it->second, g, stored);
      }
    }
  }
  std::vector<PolyGroup> out;
  out.reserve(merged.size());
  for (auto& kv : merged) {
    std::sort(kv.second.patterns.begin(), kv.second.patterns.end());
    out.push_back(std::move(kv.second));
  }
  return out;
}

struct RootEntry {
  std::size_t group;
  Rational lo;
  Rational hi;
};

/// Append-only JSONL record of finished isolation units.
class Journal {
 public:
  Journal(const std::string& path, const nlohmann::json& header) : path_(path) {
    std::ifstream in(path);
    bool have_header = false;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error&) {
        break;  // a torn final line from an interrupted run
      }
      if (j.value("type", "") == "header") {
        if (j != header) throw std::runtime_error("journal " + path + " belongs to a different run");
        have_header = true;
      } else if (j.value("type", "") == "unit") {
        std::vector<RootEntry> roots;
        for (const auto& r : j.at("roots"))
          roots.push_back({r.at(0).get<std::size_t>(), parse_rational(r.at(1).get<std::string>()),
                           parse_rational(r.at(2).get<std::string>())});
        done_[j.at("index").get<std::size_t>()] = std::move(roots);
      }
    }
    in.close();
    out_.open(path, std::ios::app);
    if (!out_) throw std::runtime_error("cannot open journal " + path);
    if (!have_header) {
      if (!done_.empty()) throw std::runtime_error("journal " + path + " has no header");
      out_ << header.dump() << '\n' << std::flush;
    }
  }

  const std::vector<RootEntry>* find(std::size_t unit) const {
    auto it = done_.find(unit);
    return it == done_.end() ? nullptr : &it->second;
  }

  void record(std::size_t unit, const std::vector<RootEntry>& roots) {
    nlohmann::json j{{"type", "unit"}, {"index", unit}, {"roots", nlohmann::json::array()}};
    for (const auto& r : roots) j["roots"].push_back({r.group, to_string(r.lo), to_string(r.hi)});
    std::lock_guard<std::mutex> lock(mutex_);
    out_ << j.dump() << '\n' << std::flush;
  }

  std::size_t completed() const { return done_.size(); }

 private:
  std::string path_;
  std::map<std::size_t, std::vector<RootEntry>> done_;
  std::ofstream out_;
  std::mutex mutex_;
};

}  // namespace detail

/// Every beta in the open range (lo, hi) at which two critical values of
/// length-n words coincide, ascending, each with its source pairs. Lengths
/// above options.cap need options.long_run.
inline std::vector<TransitionPoint> transitions(int n, const Rational& lo = Rational(1), const Rational& hi = Rational(2),
                                                const TransitionOptions& options = {}) {
  if (n < 1 || n > 30) throw std::invalid_argument("length must be in 1..30");
  if (n > options.cap && !options.long_run)
    throw CapExceeded("length " + std::to_string(n) + " exceeds the cap of " + std::to_string(options.cap) +
                      "; enable long runs to proceed");
  if (!(Rational(1) <= lo && lo < hi)) throw std::invalid_argument("range must satisfy 1 <= lo < hi");

  auto groups = detail::collect_polynomials(n, options.workers, options.stored_sources);

  constexpr std::size_t unit_size = 64;
  const std::size_t units = (groups.size() + unit_size - 1) / unit_size;
  std::optional<detail::Journal> journal;
  if (options.journal) {
    nlohmann::json header{{"type", "header"}, {"n", n}, {"lo", to_string(lo)}, {"hi", to_string(hi)},
                          {"polynomials", groups.size()}, {"unit", unit_size}};
    journal.emplace(*options.journal, header);
  }
  auto isolated = parallel_map<std::vector<detail::RootEntry>>(units, options.workers, [&](std::size_t u) {
    if (journal) {
      if (auto done = journal->find(u)) return *done;
    }
    std::vector<detail::RootEntry> roots;
    const std::size_t end = std::min(groups.size(), (u + 1) * unit_size);
    for (std::size_t g = u * unit_size; g < end; ++g) {
      for (const auto& r : isolate_real_roots(groups[g].poly, lo, hi)) roots.push_back({g, r.lo(), r.hi()});
    }
    if (journal) journal->record(u, roots);
    return roots;
  });

  std::vector<detail::RootEntry> entries;
  for (auto& unit : isolated)
    for (auto& r : unit) entries.push_back(std::move(r));
  std::vector<IntPolynomial> square_free(groups.size());
  for (const auto& e : entries) {
    if (square_free[e.group].is_zero()) square_free[e.group] = groups[e.group].poly.square_free_part();
  }
  // narrow enclosures up front so most comparisons are interval-disjoint
  const Rational eps(Integer(1), pow2(64));
  auto roots = parallel_map<AlgebraicReal>(entries.size(), options.workers, [&](std::size_t i) {
    return AlgebraicReal(square_free[entries[i].group], entries[i].lo, entries[i].hi).refined(eps);
  });
  std::vector<std::size_t> order(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto c = compare(roots[a], roots[b]);
    if (c != 0) return c < 0;
    return entries[a].group < entries[b].group;
  });

  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i : order) {
    if (!clusters.empty() && compare(roots[clusters.back().front()], roots[i]) == 0) {
      clusters.back().push_back(i);
    } else {
      clusters.push_back({i});
    }
  }

  auto points = parallel_map<TransitionPoint>(clusters.size(), options.workers, [&](std::size_t c) {
    const auto& members = clusters[c];
    IntPolynomial g = groups[entries[members.front()].group].poly;
    std::vector<std::uint64_t> ids;
    TransitionPoint tp{roots[members.front()], {}, 0, 0, std::nullopt};
    for (std::size_t i : members) {
      const auto& grp = groups[entries[i].group];
      g = gcd(g, grp.poly);
      tp.sources_count += grp.sources;
      tp.pattern_count += grp.pattern_count;
      ids.insert(ids.end(), grp.patterns.begin(), grp.patterns.end());
    }
    g = cyclotomic_strip(g).square_free_part();
    const AlgebraicReal& r = roots[members.front()];
    tp.value = AlgebraicReal::certify(g, r.lo(), r.hi());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    if (ids.size() > options.stored_sources) ids.resize(options.stored_sources);
    for (auto id : ids) tp.sources.push_back(EquationPattern::from_id(n, id).pair());
    if (options.classify) tp.pisot = is_pisot(tp.value, options.precision);
    return tp;
  });
  return points;
}

}  // namespace garsia
