#include <algorithm>
#include <numeric>

#include "pdmatch/classify.hpp"
#include "pdmatch/errors.hpp"
#include "pdmatch/exact.hpp"
#include "pdmatch/primitives.hpp"

namespace pdmatch {

namespace {

Matching capped_b_matching(const Instance& inst, const std::vector<Tolerance>& caps,
                           const std::function<bool(std::size_t, std::size_t)>& allowed) {
  CapacitatedBipartiteGraph g;
  g.left_count = inst.jobs();
  g.right_count = inst.machines();
  for (Tolerance c : caps) {
    g.right_caps.push_back(static_cast<std::size_t>(std::min<Tolerance>(c, static_cast<Tolerance>(inst.jobs()))));
  }
  for (std::size_t j = 0; j < inst.jobs(); ++j) {
    for (std::size_t i = 0; i < inst.machines(); ++i) {
      if (allowed(j, i)) g.edges.emplace_back(j, i);
    }
  }
  std::vector<Edge> edges;
  for (auto [j, i] : max_b_matching(g)) edges.push_back({j, i});
  return Matching(std::move(edges));
}

// Two-pointer sweep in monotone coordinates: jobs from most to least
// tolerant, machines from least to most capable.
Matching monotone_sweep(const Instance& inst, const MonotoneWitness& w) {
  const std::size_t n = inst.jobs(), m = inst.machines();
  std::vector<std::size_t> degree(m, 0);
  std::vector<Edge> edges;
  std::size_t pos = n;  // jobs w.jobs[0..pos) remain
  std::size_t q = 0;
  while (pos > 0 && q < m) {
    const std::size_t job = w.jobs[pos - 1];
    const std::size_t machine = w.machines[q];
    if (inst(job, machine) > static_cast<Tolerance>(degree[machine])) {
      edges.push_back({job, machine});
      ++degree[machine];
      --pos;
    } else {
      ++q;
    }
  }
  return Matching(std::move(edges));
}

}  // namespace

Matching udep_mono_sweep(std::span<const UdepMonoJob> jobs, std::size_t machines) {
  for (std::size_t p = 1; p < jobs.size(); ++p) {
    if (jobs[p].tolerance < jobs[p - 1].tolerance ||
        jobs[p].first_machine > jobs[p - 1].first_machine) {
      throw std::invalid_argument("jobs must be listed in monotone order");
    }
  }
  std::vector<std::size_t> degree(machines, 0);
  std::vector<Edge> edges;
  std::size_t pos = jobs.size();
  std::size_t i = 0;
  while (pos > 0 && i < machines) {
    const UdepMonoJob& job = jobs[pos - 1];
    if (i >= job.first_machine && static_cast<Tolerance>(degree[i]) < job.tolerance) {
      edges.push_back({pos - 1, i});
      ++degree[i];
      --pos;
    } else {
      ++i;
    }
  }
  return Matching(std::move(edges));
}

Matching solve_vdep(const Instance& inst) {
  const ClassReport r = classify(inst);
  if (!r.is_vdep) throw ClassMismatch("vdep", "some machine has two distinct nonzero tolerances");
  return capped_b_matching(inst, r.machine_tolerance, [&](std::size_t j, std::size_t i) {
    return inst(j, i) > 0 && inst(j, i) == r.machine_tolerance[i];
  });
}

Matching solve_zero_k(const Instance& inst) {
  const ClassReport r = classify(inst);
  std::vector<Tolerance> nonzero;
  for (Tolerance v : r.tolerance_set) {
    if (v != 0) nonzero.push_back(v);
  }
  if (nonzero.size() > 1) throw ClassMismatch("zero-k", "tolerances are not drawn from {0, k}");
  const Tolerance k = nonzero.empty() ? 0 : nonzero.front();
  return capped_b_matching(inst, std::vector<Tolerance>(inst.machines(), k),
                           [&](std::size_t j, std::size_t i) { return k > 0 && inst(j, i) == k; });
}

Matching solve_udep_complete(const Instance& inst) {
  const ClassReport r = classify(inst);
  if (!r.udep_complete) {
    throw ClassMismatch("udep-complete", "every job needs one positive tolerance on all machines");
  }
  const std::size_t n = inst.jobs();
  if (inst.machines() == 0) return {};
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return r.job_tolerance[a] > r.job_tolerance[b];
  });

  std::vector<Edge> edges;
  std::size_t next = 0;
  for (std::size_t i = 0; i < inst.machines() && next < n; ++i) {
    // Tolerances are non-increasing along order, so the feasible prefix
    // lengths form an interval starting at 0.
    std::size_t k = 0;
    while (next + k < n && r.job_tolerance[order[next + k]] >= static_cast<Tolerance>(k + 1)) ++k;
    for (std::size_t p = 0; p < k; ++p) edges.push_back({order[next + p], i});
    next += k;
  }
  return Matching(std::move(edges));
}

Matching solve_udep_mono(const Instance& inst) {
  const ClassReport r = classify(inst);
  if (!r.is_udep) throw ClassMismatch("udep-mono", "instance is not U-dependent");
  if (!r.monotonizable) throw ClassMismatch("udep-mono", "instance is not monotonizable");
  // With entries in {0, b_j}, "i in V_j and d_i < b_j" is b(j, i) > d_i.
  return monotone_sweep(inst, *r.monotonizable);
}

Matching solve_mono_general_greedy(const Instance& inst) {
  auto w = find_monotone_order(inst);
  if (!w) throw ClassMismatch("mono-greedy", "instance is not monotonizable");
  return monotone_sweep(inst, *w);
}

}  // namespace pdmatch
