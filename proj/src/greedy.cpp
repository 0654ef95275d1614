#include "pdmatch/greedy.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace pdmatch {

namespace {

std::vector<std::size_t> resolve_order(const std::vector<std::size_t>& requested, std::size_t m) {
  if (requested.empty()) {
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    return order;
  }
  std::vector<bool> seen(m, false);
  if (requested.size() != m) throw std::invalid_argument("machine_order must list every machine once");
  for (std::size_t i : requested) {
    if (i >= m || seen[i]) throw std::invalid_argument("machine_order must be a permutation");
    seen[i] = true;
  }
  return requested;
}

}  // namespace

Matching greedy_strongly_maximal(const Instance& inst, const GreedyConfig& cfg) {
  const std::size_t n = inst.jobs();
  const auto order = resolve_order(cfg.machine_order, inst.machines());
  const bool prefer_high = cfg.job_tiebreak == TieBreak::HighestIndexFirst;

  std::vector<bool> matched(n, false);
  std::vector<Edge> edges;
  std::vector<std::size_t> candidates, count;
  candidates.reserve(n);

  for (std::size_t i : order) {
    candidates.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (!matched[j] && inst(j, i) > 0) candidates.push_back(j);
    }
    // k = max{k : at least k candidates have tolerance >= k}, via a histogram
    // of tolerances clipped to the candidate count.
    const std::size_t c = candidates.size();
    count.assign(c + 2, 0);
    for (std::size_t j : candidates) {
      ++count[static_cast<std::size_t>(std::min<Tolerance>(inst(j, i), static_cast<Tolerance>(c)))];
    }
    std::size_t k = c, at_least = 0;
    for (; k > 0; --k) {
      at_least += count[k];
      if (at_least >= k) break;
    }
    std::nth_element(candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(k),
                     candidates.end(), [&](std::size_t a, std::size_t b) {
                       if (inst(a, i) != inst(b, i)) return inst(a, i) > inst(b, i);
                       return prefer_high ? a > b : a < b;
                     });
    for (std::size_t p = 0; p < k; ++p) {
      matched[candidates[p]] = true;
      edges.push_back({candidates[p], i});
    }
  }
  return Matching(std::move(edges));
}

Matching greedy_global(const Instance& inst, const GlobalGreedyConfig& cfg) {
  const std::size_t n = inst.jobs(), m = inst.machines();
  const bool job_high = cfg.job_tiebreak == TieBreak::HighestIndexFirst;
  const bool machine_high = cfg.machine_tiebreak == TieBreak::HighestIndexFirst;

  // Admissible pairs only shrink as degrees grow, so a pair that is popped
  // while inadmissible can be discarded for good.
  using Entry = std::tuple<Tolerance, std::size_t, std::size_t>;  // (b, job, machine)
  auto worse = [&](const Entry& x, const Entry& y) {
    if (std::get<0>(x) != std::get<0>(y)) return std::get<0>(x) < std::get<0>(y);
    if (std::get<1>(x) != std::get<1>(y)) {
      return job_high ? std::get<1>(x) < std::get<1>(y) : std::get<1>(x) > std::get<1>(y);
    }
    return machine_high ? std::get<2>(x) < std::get<2>(y) : std::get<2>(x) > std::get<2>(y);
  };
  std::vector<Entry> heap;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (inst(j, i) > 0) heap.emplace_back(inst(j, i), j, i);
    }
  }
  std::make_heap(heap.begin(), heap.end(), worse);

  std::vector<bool> matched(n, false);
  std::vector<std::size_t> degree(m, 0);
  std::vector<Edge> edges;
  while (!heap.empty()) {
    std::pop_heap(heap.begin(), heap.end(), worse);
    auto [b, j, i] = heap.back();
    heap.pop_back();
    if (matched[j] || static_cast<Tolerance>(degree[i]) >= b) continue;
    matched[j] = true;
    ++degree[i];
    edges.push_back({j, i});
  }
  return Matching(std::move(edges));
}

}  // namespace pdmatch
