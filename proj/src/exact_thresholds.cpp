#include <algorithm>
#include <set>

#include "pdmatch/errors.hpp"
#include "pdmatch/exact.hpp"
#include "pdmatch/primitives.hpp"

namespace pdmatch {

std::vector<std::vector<Tolerance>> threshold_candidates(const Instance& inst) {
  std::vector<std::vector<Tolerance>> out(inst.machines());
  for (std::size_t i = 0; i < inst.machines(); ++i) {
    std::set<Tolerance> values{0};
    for (std::size_t j = 0; j < inst.jobs(); ++j) values.insert(inst(j, i));
    out[i].assign(values.begin(), values.end());
  }
  return out;
}

std::uint64_t threshold_vector_count(const Instance& inst) {
  std::uint64_t product = 1;
  for (const auto& c : threshold_candidates(inst)) {
    if (product > kUnlimited / c.size()) return kUnlimited;
    product *= c.size();
  }
  return product;
}

Matching threshold_matching(const Instance& inst, const ThresholdVector& t) {
  if (t.thresholds.size() != inst.machines()) {
    throw std::invalid_argument("threshold vector length must equal the machine count");
  }
  CapacitatedBipartiteGraph g;
  g.left_count = inst.jobs();
  g.right_count = inst.machines();
  g.right_caps.resize(inst.machines());
  for (std::size_t i = 0; i < inst.machines(); ++i) {
    g.right_caps[i] = std::min(t.thresholds[i], inst.jobs());
  }
  for (std::size_t j = 0; j < inst.jobs(); ++j) {
    for (std::size_t i = 0; i < inst.machines(); ++i) {
      const auto ti = static_cast<Tolerance>(t.thresholds[i]);
      if (ti > 0 && inst(j, i) >= ti) g.edges.emplace_back(j, i);
    }
  }
  std::vector<Edge> edges;
  for (auto [j, i] : max_b_matching(g)) edges.push_back({j, i});
  return Matching(std::move(edges));
}

Matching solve_const_m(const Instance& inst, std::uint64_t budget) {
  const std::size_t n = inst.jobs(), m = inst.machines();
  if (threshold_vector_count(inst) > budget) {
    throw BudgetExceeded("const-m: threshold vector count exceeds budget " + std::to_string(budget));
  }
  const auto candidates = threshold_candidates(inst);

  // eligible[i][c]: jobs with tolerance >= candidates[i][c] on machine i.
  std::vector<std::vector<std::size_t>> eligible(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (Tolerance c : candidates[i]) {
      std::size_t cnt = 0;
      for (std::size_t j = 0; j < n; ++j) cnt += inst(j, i) >= c && c > 0;
      eligible[i].push_back(cnt);
    }
  }

  Matching best;
  std::vector<std::size_t> digit(m, 0);
  ThresholdVector tv{std::vector<std::size_t>(m, 0)};
  for (;;) {
    std::size_t bound = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Tolerance c = candidates[i][digit[i]];
      tv.thresholds[i] = static_cast<std::size_t>(c);
      bound += std::min<std::size_t>(static_cast<std::size_t>(std::min<Tolerance>(c, static_cast<Tolerance>(n))),
                                     eligible[i][digit[i]]);
    }
    if (std::min(bound, n) > best.size()) {
      Matching cur = threshold_matching(inst, tv);
      if (cur.size() > best.size()) best = std::move(cur);
      if (best.size() == n) break;
    }
    std::size_t i = 0;
    while (i < m && ++digit[i] == candidates[i].size()) digit[i++] = 0;
    if (i == m) break;
  }
  return best;
}

}  // namespace pdmatch
