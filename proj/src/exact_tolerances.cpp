#include <algorithm>
#include <optional>

#include "pdmatch/classify.hpp"
#include "pdmatch/errors.hpp"
#include "pdmatch/exact.hpp"
#include "pdmatch/primitives.hpp"

namespace pdmatch {

Matching solve_uniform_tolerance(const Instance& inst) {
  const ClassReport r = classify(inst);
  if (!inst.empty() && !r.uniform()) {
    throw ClassMismatch("uniform", "entries are not all equal to one positive k");
  }
  if (inst.empty()) return {};
  const auto k = static_cast<std::size_t>(r.tolerance_set.front());
  const std::size_t total = std::min(inst.jobs(), k * inst.machines());
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < total; ++j) edges.push_back({j, j / k});
  return Matching(std::move(edges));
}

namespace {

void require_one_two(const Instance& inst) {
  for (Tolerance v : inst.data()) {
    if (v != 1 && v != 2) throw ClassMismatch("one-two", "entries must be drawn from {1, 2}");
  }
}

// Vertex layout of the gadget: jobs [0, n), machine i as the pair
// (n + 2i, n + 2i + 1), then n - 2x dummies each adjacent to every job.
GeneralGraph pairing_gadget(const Instance& inst, std::size_t x) {
  const std::size_t n = inst.jobs(), m = inst.machines();
  GeneralGraph g;
  g.vertex_count = n + 2 * m + (n - 2 * x);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (inst(j, i) == 2) {
        g.edges.emplace_back(j, n + 2 * i);
        g.edges.emplace_back(j, n + 2 * i + 1);
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) g.edges.emplace_back(n + 2 * i, n + 2 * i + 1);
  for (std::size_t d = 0; d < n - 2 * x; ++d) {
    for (std::size_t j = 0; j < n; ++j) g.edges.emplace_back(j, n + 2 * m + d);
  }
  return g;
}

// Jobs paired on machines by a perfect matching of the gadget, or nullopt.
std::optional<std::vector<Edge>> pairing(const Instance& inst, std::size_t x) {
  const std::size_t n = inst.jobs();
  const GeneralGraph g = pairing_gadget(inst, x);
  const auto matched = max_general_matching(g);
  if (2 * matched.size() != g.vertex_count) return std::nullopt;
  std::vector<Edge> edges;
  for (auto [u, v] : matched) {
    if (u < n && v >= n && v < n + 2 * inst.machines()) edges.push_back({u, (v - n) / 2});
  }
  return edges;
}

}  // namespace

bool one_two_pairing_feasible(const Instance& inst, std::size_t x) {
  require_one_two(inst);
  if (2 * x > inst.jobs() || x > inst.machines()) return false;
  return pairing(inst, x).has_value();
}

Matching solve_one_two(const Instance& inst) {
  require_one_two(inst);
  const std::size_t n = inst.jobs(), m = inst.machines();
  // Feasibility is monotone in x: demoting one paired machine turns a
  // perfect matching of the x gadget into one of the x - 1 gadget.
  std::size_t lo = 0, hi = std::min(n / 2, m);
  while (lo < hi) {
    const std::size_t mid = (lo + hi + 1) / 2;
    if (pairing(inst, mid)) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  std::vector<Edge> edges = *pairing(inst, lo);

  std::vector<bool> job_used(n, false), machine_used(m, false);
  for (const Edge& e : edges) {
    job_used[e.job] = true;
    machine_used[e.machine] = true;
  }
  // Every entry is at least 1, so any leftover job fits alone on an empty machine.
  std::size_t i = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (job_used[j]) continue;
    while (i < m && machine_used[i]) ++i;
    if (i == m) break;
    edges.push_back({j, i});
    machine_used[i] = true;
  }
  return Matching(std::move(edges));
}

namespace {

// One guess of the monotone limited-tolerance search, evaluated in monotone
// coordinates (job 0 least tolerant, machine 0 least capable).
struct ModularSlot {
  std::size_t machine;
  std::size_t target;
};

class MonoLimitedSearch {
 public:
  MonoLimitedSearch(const Instance& mono, std::vector<Tolerance> tolerances)
      : inst_(mono), tol_(std::move(tolerances)), n_(mono.jobs()), m_(mono.machines()) {}

  // Returns nullopt when the guess cannot be realised (an S machine lacks
  // enough eligible jobs).
  std::optional<std::vector<Edge>> run(std::size_t jobs_used, std::size_t block,
                                       const std::vector<ModularSlot>& slots) const {
    std::vector<bool> matched(n_, false);
    std::vector<std::size_t> degree(m_, 0);
    std::vector<bool> reserved(m_, false);
    std::vector<Edge> edges;
    const std::size_t first_job = n_ - jobs_used;
    const std::size_t first_block = m_ - block;
    auto match = [&](std::size_t j, std::size_t i) {
      matched[j] = true;
      ++degree[i];
      edges.push_back({j, i});
    };

    // Machines outside the capable block get k1 of the least tolerant jobs.
    std::size_t next = first_job;
    const auto k1 = static_cast<std::size_t>(tol_.front());
    for (std::size_t i = 0; i < first_block; ++i) {
      for (std::size_t c = 0; c < k1 && next < n_; ++c) match(next++, i);
    }

    for (const ModularSlot& s : slots) {
      reserved[s.machine] = true;
      std::size_t placed = 0;
      for (std::size_t j = first_job; j < n_ && placed < s.target; ++j) {
        if (!matched[j] && inst_(j, s.machine) >= static_cast<Tolerance>(s.target)) {
          match(j, s.machine);
          ++placed;
        }
      }
      if (placed < s.target) return std::nullopt;
    }

    for (;;) {
      std::size_t lead = first_job;
      while (lead < n_ && matched[lead]) ++lead;
      if (lead == n_) break;

      // Largest k in T admitted by the lead job on some empty block machine,
      // and the least capable such machine.
      std::optional<std::size_t> chosen;
      Tolerance k = 0;
      for (auto it = tol_.rbegin(); it != tol_.rend() && !chosen; ++it) {
        if (*it == 0) break;
        for (std::size_t i = first_block; i < m_; ++i) {
          if (!reserved[i] && degree[i] == 0 && inst_(lead, i) >= *it) {
            chosen = i;
            k = *it;
            break;
          }
        }
      }
      if (!chosen) break;
      std::size_t placed = 0;
      for (std::size_t j = lead; j < n_ && placed < static_cast<std::size_t>(k); ++j) {
        if (!matched[j]) {
          match(j, *chosen);
          ++placed;
        }
      }
    }
    return edges;
  }

 private:
  const Instance& inst_;
  std::vector<Tolerance> tol_;
  std::size_t n_, m_;
};

}  // namespace

Matching solve_mono_three_tol(const Instance& inst, std::uint64_t budget,
                              const std::function<void(const Matching&)>& on_guess) {
  const ClassReport r = classify(inst);
  if (!r.monotonizable) throw ClassMismatch("mono-3tol", "instance is not monotonizable");
  if (r.tolerance_set.size() > 3) throw ClassMismatch("mono-3tol", "more than three distinct tolerances");
  if (inst.empty()) return {};

  const MonotoneWitness& w = *r.monotonizable;
  const Instance mono = inst.permuted(w.jobs, w.machines);
  const std::size_t n = inst.jobs(), m = inst.machines();
  const std::vector<Tolerance>& tol = r.tolerance_set;

  auto to_original = [&](const std::vector<Edge>& edges) {
    std::vector<Edge> out;
    out.reserve(edges.size());
    for (const Edge& e : edges) out.push_back({w.jobs[e.job], w.machines[e.machine]});
    return Matching(std::move(out));
  };

  // Every entry is at least k1, so k1 jobs fit on every machine.
  const auto k1 = static_cast<std::size_t>(tol.front());
  if (k1 > 0 && n <= k1 * m) {
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < n; ++j) edges.push_back({j, j / k1});
    Matching all = to_original(edges);
    if (on_guess) on_guess(all);
    return all;
  }

  // Target degrees strictly between consecutive tolerances, capped at n.
  std::vector<std::vector<std::size_t>> gap_targets;
  for (std::size_t g = 0; g + 1 < tol.size(); ++g) {
    std::vector<std::size_t> targets;
    for (Tolerance v = tol[g] + 1; v < tol[g + 1] && v <= static_cast<Tolerance>(n); ++v) {
      targets.push_back(static_cast<std::size_t>(v));
    }
    gap_targets.push_back(std::move(targets));
  }

  std::uint64_t guesses = 0;
  MonoLimitedSearch search(mono, tol);
  std::vector<Edge> best;

  auto evaluate = [&](std::size_t jobs_used, std::size_t block, const std::vector<ModularSlot>& slots) {
    if (++guesses > budget) {
      throw BudgetExceeded("mono-3tol: guess count exceeds budget " + std::to_string(budget));
    }
    auto edges = search.run(jobs_used, block, slots);
    if (!edges) return;
    if (on_guess) on_guess(to_original(*edges));
    if (edges->size() > best.size()) best = std::move(*edges);
  };

  // Slots hold at most one machine per gap; both processing orders of a
  // two-slot guess are tried.
  std::vector<ModularSlot> slots;
  std::function<void(std::size_t, std::size_t, std::size_t)> choose_slots =
      [&](std::size_t gap, std::size_t jobs_used, std::size_t block) {
        if (gap == gap_targets.size()) {
          evaluate(jobs_used, block, slots);
          if (slots.size() == 2) {
            std::vector<ModularSlot> swapped{slots[1], slots[0]};
            evaluate(jobs_used, block, swapped);
          }
          return;
        }
        choose_slots(gap + 1, jobs_used, block);
        for (std::size_t i = m - block; i < m; ++i) {
          bool taken = false;
          for (const auto& s : slots) taken = taken || s.machine == i;
          if (taken) continue;
          for (std::size_t target : gap_targets[gap]) {
            slots.push_back({i, target});
            choose_slots(gap + 1, jobs_used, block);
            slots.pop_back();
          }
        }
      };

  for (std::size_t jobs_used = 0; jobs_used <= n; ++jobs_used) {
    for (std::size_t block = 0; block <= m; ++block) choose_slots(0, jobs_used, block);
  }
  return to_original(best);
}

}  // namespace pdmatch
