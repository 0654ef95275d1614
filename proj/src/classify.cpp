#include "pdmatch/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace pdmatch {

bool is_monotone(const Instance& inst) {
  const std::size_t n = inst.jobs(), m = inst.machines();
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      if (i + 1 < m && inst(j, i) > inst(j, i + 1)) return false;
      if (j + 1 < n && inst(j, i) > inst(j + 1, i)) return false;
    }
  }
  return true;
}

std::optional<MonotoneWitness> find_monotone_order(const Instance& inst) {
  const std::size_t n = inst.jobs(), m = inst.machines();

  std::vector<Tolerance> row_sum(n, 0), col_sum(m, 0);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      row_sum[j] += inst(j, i);
      col_sum[i] += inst(j, i);
    }
  }

  MonotoneWitness w;
  w.jobs.resize(n);
  std::iota(w.jobs.begin(), w.jobs.end(), 0);
  std::stable_sort(w.jobs.begin(), w.jobs.end(), [&](std::size_t a, std::size_t b) {
    if (row_sum[a] != row_sum[b]) return row_sum[a] < row_sum[b];
    auto ra = inst.row(a), rb = inst.row(b);
    return std::lexicographical_compare(ra.begin(), ra.end(), rb.begin(), rb.end());
  });

  w.machines.resize(m);
  std::iota(w.machines.begin(), w.machines.end(), 0);
  std::stable_sort(w.machines.begin(), w.machines.end(), [&](std::size_t a, std::size_t b) {
    if (col_sum[a] != col_sum[b]) return col_sum[a] < col_sum[b];
    for (std::size_t j = 0; j < n; ++j) {
      if (inst(j, a) != inst(j, b)) return inst(j, a) < inst(j, b);
    }
    return false;
  });

  if (!is_monotone(inst.permuted(w.jobs, w.machines))) return std::nullopt;
  return w;
}

std::vector<TypeProfile> job_types(const Instance& inst) {
  std::vector<TypeProfile> types;
  std::map<std::vector<Tolerance>, std::size_t> index;
  for (std::size_t j = 0; j < inst.jobs(); ++j) {
    auto r = inst.row(j);
    std::vector<Tolerance> key(r.begin(), r.end());
    auto [it, inserted] = index.try_emplace(key, types.size());
    if (inserted) types.push_back({std::move(key), {}});
    types[it->second].members.push_back(j);
  }
  return types;
}

ClassReport classify(const Instance& inst) {
  const std::size_t n = inst.jobs(), m = inst.machines();
  ClassReport r;
  r.monotonizable = find_monotone_order(inst);

  std::set<Tolerance> values(inst.data().begin(), inst.data().end());
  r.tolerance_set.assign(values.begin(), values.end());

  r.is_udep = true;
  r.udep_complete = true;
  r.job_tolerance.assign(n, 0);
  r.job_machines.assign(n, {});
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) {
      const Tolerance b = inst(j, i);
      if (b == 0) {
        r.udep_complete = false;
        continue;
      }
      if (r.job_tolerance[j] != 0 && r.job_tolerance[j] != b) r.is_udep = false;
      r.job_tolerance[j] = b;
      r.job_machines[j].push_back(i);
    }
  }
  r.udep_complete = r.udep_complete && r.is_udep;
  if (!r.is_udep) {
    r.job_tolerance.clear();
    r.job_machines.clear();
  }

  r.is_vdep = true;
  r.machine_tolerance.assign(m, 0);
  r.machine_jobs.assign(m, {});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Tolerance b = inst(j, i);
      if (b == 0) continue;
      if (r.machine_tolerance[i] != 0 && r.machine_tolerance[i] != b) r.is_vdep = false;
      r.machine_tolerance[i] = b;
      r.machine_jobs[i].push_back(j);
    }
  }
  if (!r.is_vdep) {
    r.machine_tolerance.clear();
    r.machine_jobs.clear();
  }

  r.types = job_types(inst);
  r.type_count = r.types.size();
  r.type_of.assign(n, 0);
  for (std::size_t t = 0; t < r.types.size(); ++t) {
    for (std::size_t j : r.types[t].members) r.type_of[j] = t;
  }
  return r;
}

}  // namespace pdmatch
