#pragma once

// Exact ordering of many quantities known through interval enclosures, with
// precision escalation and an exact fallback for the clusters that survive.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "garsia/algebra/interval.hpp"
#include "garsia/expansion/beta_context.hpp"

namespace garsia {

/// Sorts items 0..count-1 ascending and groups exactly equal ones.
///
/// `enclosure(i, level)` returns an Interval containing item i, tighter for
/// higher levels. `exact(i, j)` returns the exact order of two items or
/// nullopt when it cannot be decided, which raises IndeterminateOrdering.
/// Deterministic: within a group, items appear in increasing index order.
template <class EnclosureFn, class ExactFn>
std::vector<std::vector<std::size_t>> exact_order(std::size_t count, int max_level, EnclosureFn&& enclosure,
                                                  ExactFn&& exact) {
  std::vector<std::vector<std::size_t>> groups;
  if (count == 0) return groups;

  struct Entry {
    std::size_t index;
    Interval box;
  };

  // sorts by lower endpoint and splits into runs of mutually chained overlaps
  auto clusters = [](std::vector<Entry>& entries) {
    std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
      int c = compare_lower(a.box, b.box);
      return c != 0 ? c < 0 : a.index < b.index;
    });
    std::vector<std::vector<Entry>> out;
    std::size_t reach = 0;  // member of the current run with the largest upper end
    for (auto& e : entries) {
      if (out.empty() || out.back()[reach].box.certainly_less(e.box)) {
        out.emplace_back();
        out.back().push_back(std::move(e));
        reach = 0;
      } else {
        out.back().push_back(std::move(e));
        if (mpfr_cmp(out.back().back().box.hi(), out.back()[reach].box.hi()) > 0) reach = out.back().size() - 1;
      }
    }
    return out;
  };

  auto settle = [&](std::vector<Entry>& members) {
    std::vector<std::size_t> idx;
    for (const auto& e : members) idx.push_back(e.index);
    std::sort(idx.begin(), idx.end());
    auto cmp = [&](std::size_t a, std::size_t b) {
      std::optional<std::strong_ordering> r = exact(a, b);
      if (!r) throw IndeterminateOrdering("two quantities could not be ordered after precision escalation");
      return *r;
    };
    std::vector<std::vector<std::size_t>> local;
    for (std::size_t i : idx) {
      bool placed = false;
      for (auto& g : local) {
        if (cmp(g.front(), i) == 0) {
          g.push_back(i);
          placed = true;
          break;
        }
      }
      if (!placed) local.push_back({i});
    }
    std::sort(local.begin(), local.end(),
              [&](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) { return cmp(a.front(), b.front()) < 0; });
    for (auto& g : local) groups.push_back(std::move(g));
  };

  // depth-first so groups come out in ascending order
  auto process = [&](auto&& self, std::vector<Entry> entries, int level) -> void {
    for (auto& cluster : clusters(entries)) {
      if (cluster.size() == 1) {
        groups.push_back({cluster.front().index});
      } else if (level < max_level) {
        std::vector<Entry> finer;
        finer.reserve(cluster.size());
        for (const auto& e : cluster) finer.push_back({e.index, enclosure(e.index, level + 1)});
        self(self, std::move(finer), level + 1);
      } else {
        settle(cluster);
      }
    }
  };

  std::vector<Entry> entries;
  entries.reserve(count);
  for (std::size_t i = 0; i < count; ++i) entries.push_back({i, enclosure(i, 0)});
  process(process, std::move(entries), 0);
  return groups;
}

}  // namespace garsia
