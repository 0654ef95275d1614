#include "support/brute.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

namespace brute {

bool is_pd_matching(const Instance& inst, const std::vector<int>& machine_of) {
  std::vector<std::size_t> degree(inst.machines(), 0);
  for (int i : machine_of) {
    if (i >= 0) ++degree[static_cast<std::size_t>(i)];
  }
  for (std::size_t j = 0; j < machine_of.size(); ++j) {
    const int i = machine_of[j];
    if (i < 0) continue;
    if (static_cast<Tolerance>(degree[static_cast<std::size_t>(i)]) > inst(j, static_cast<std::size_t>(i))) {
      return false;
    }
  }
  return true;
}

std::size_t max_pd_matching(const Instance& inst) {
  const std::size_t n = inst.jobs(), m = inst.machines();
  std::vector<int> a(n, -1);
  std::size_t best = 0;
  for (;;) {
    if (is_pd_matching(inst, a)) {
      best = std::max(best, static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](int x) { return x >= 0; })));
    }
    std::size_t j = 0;
    while (j < n && a[j] == static_cast<int>(m) - 1) a[j++] = -1;
    if (j == n) break;
    ++a[j];
  }
  return best;
}

std::size_t max_b_matching(const pdmatch::CapacitatedBipartiteGraph& g) {
  const std::size_t e = g.edges.size();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
    std::vector<std::size_t> left(g.left_count, 0), right(g.right_count, 0);
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t b = 0; b < e && ok; ++b) {
      if (!(mask >> b & 1)) continue;
      auto [u, v] = g.edges[b];
      ok = ++left[u] <= 1 && ++right[v] <= g.right_caps[v];
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

std::size_t max_general_matching(const pdmatch::GeneralGraph& g) {
  std::vector<bool> used(g.vertex_count, false);
  std::function<std::size_t(std::size_t)> rec = [&](std::size_t idx) -> std::size_t {
    if (idx == g.edges.size()) return 0;
    std::size_t best = rec(idx + 1);
    auto [u, v] = g.edges[idx];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = true;
      best = std::max(best, 1 + rec(idx + 1));
      used[u] = used[v] = false;
    }
    return best;
  };
  return rec(0);
}

bool monotonizable(const Instance& inst) {
  const std::size_t n = inst.jobs(), m = inst.machines();
  std::vector<std::size_t> rows(n), cols(m);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::iota(cols.begin(), cols.end(), 0);
    do {
      bool ok = true;
      for (std::size_t p = 0; p < n && ok; ++p) {
        for (std::size_t q = 0; q < m && ok; ++q) {
          const Tolerance v = inst(rows[p], cols[q]);
          if (p + 1 < n && inst(rows[p + 1], cols[q]) < v) ok = false;
          if (q + 1 < m && inst(rows[p], cols[q + 1]) < v) ok = false;
        }
      }
      if (ok) return true;
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return false;
}

bool has_3partition(const std::vector<Tolerance>& values, Tolerance bound) {
  std::vector<bool> used(values.size(), false);
  std::function<bool()> rec = [&]() -> bool {
    std::size_t first = 0;
    while (first < values.size() && used[first]) ++first;
    if (first == values.size()) return true;
    used[first] = true;
    for (std::size_t b = first + 1; b < values.size(); ++b) {
      if (used[b]) continue;
      used[b] = true;
      for (std::size_t c = b + 1; c < values.size(); ++c) {
        if (used[c] || values[first] + values[b] + values[c] != bound) continue;
        used[c] = true;
        if (rec()) return true;
        used[c] = false;
      }
      used[b] = false;
    }
    used[first] = false;
    return false;
  };
  return values.size() % 3 == 0 && rec();
}

bool is_perfect_3dm(const pdmatch::TripleSystem& ts, const std::vector<std::array<std::size_t, 3>>& chosen) {
  if (chosen.size() != ts.k) return false;
  for (const auto& tr : chosen) {
    if (std::find(ts.triples.begin(), ts.triples.end(), tr) == ts.triples.end()) return false;
  }
  for (std::size_t axis = 0; axis < 3; ++axis) {
    std::set<std::size_t> seen;
    for (const auto& tr : chosen) seen.insert(tr[axis]);
    if (seen.size() != ts.k) return false;
  }
  return true;
}

namespace {

bool perfect_cover(const std::vector<std::vector<std::size_t>>& tuples, std::size_t d, std::size_t k) {
  std::vector<std::vector<bool>> covered(d, std::vector<bool>(k, false));
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t picked) -> bool {
    if (picked == k) return true;
    if (idx == tuples.size()) return false;
    const auto& tu = tuples[idx];
    bool free = true;
    for (std::size_t a = 0; a < d && free; ++a) free = !covered[a][tu[a]];
    if (free) {
      for (std::size_t a = 0; a < d; ++a) covered[a][tu[a]] = true;
      if (rec(idx + 1, picked + 1)) return true;
      for (std::size_t a = 0; a < d; ++a) covered[a][tu[a]] = false;
    }
    return rec(idx + 1, picked);
  };
  return rec(0, 0);
}

}  // namespace

bool has_perfect_3dm(const pdmatch::TripleSystem& ts) {
  std::vector<std::vector<std::size_t>> tuples;
  for (const auto& tr : ts.triples) tuples.push_back({tr[0], tr[1], tr[2]});
  return perfect_cover(tuples, 3, ts.k);
}

bool has_perfect_ddm(const pdmatch::TupleSystem& ts) { return perfect_cover(ts.tuples, ts.d, ts.k); }

std::size_t unpruned_threshold_optimum(const Instance& inst) {
  const std::size_t n = inst.jobs(), m = inst.machines();
  std::vector<std::size_t> d(m, 0);
  std::size_t best = 0;
  for (;;) {
    // Slot expansion plus augmenting paths.
    std::vector<std::size_t> slot_machine;
    for (std::size_t i = 0; i < m; ++i) slot_machine.insert(slot_machine.end(), d[i], i);
    std::vector<int> owner(slot_machine.size(), -1);
    std::vector<bool> seen;
    std::function<bool(std::size_t)> augment = [&](std::size_t j) -> bool {
      for (std::size_t s = 0; s < slot_machine.size(); ++s) {
        const std::size_t i = slot_machine[s];
        if (seen[s] || inst(j, i) < static_cast<Tolerance>(d[i])) continue;
        seen[s] = true;
        if (owner[s] < 0 || augment(static_cast<std::size_t>(owner[s]))) {
          owner[s] = static_cast<int>(j);
          return true;
        }
      }
      return false;
    };
    std::size_t size = 0;
    for (std::size_t j = 0; j < n; ++j) {
      seen.assign(slot_machine.size(), false);
      size += augment(j);
    }
    best = std::max(best, size);
    std::size_t i = 0;
    while (i < m && d[i] == n) d[i++] = 0;
    if (i == m) break;
    ++d[i];
  }
  return best;
}

std::size_t h_index(std::vector<Tolerance> values) {
  std::sort(values.begin(), values.end(), std::greater<>());
  std::size_t k = 0;
  while (k < values.size() && values[k] >= static_cast<Tolerance>(k + 1)) ++k;
  return k;
}

}  // namespace brute
