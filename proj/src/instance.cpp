#include "pdmatch/instance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "pdmatch/errors.hpp"

namespace pdmatch {

Instance::Instance(std::size_t jobs, std::size_t machines, std::vector<Tolerance> row_major)
    : jobs_(jobs), machines_(machines), tolerances_(std::move(row_major)) {
  if (tolerances_.size() != jobs_ * machines_) {
    throw std::invalid_argument("tolerance matrix must hold exactly n*m entries");
  }
  for (std::size_t k = 0; k < tolerances_.size(); ++k) {
    if (tolerances_[k] < 0) {
      throw std::invalid_argument("negative tolerance at (" + std::to_string(k / machines_) +
                                  "," + std::to_string(k % machines_) + ")");
    }
  }
}

Instance Instance::from_rows(const std::vector<std::vector<Tolerance>>& rows) {
  const std::size_t n = rows.size();
  const std::size_t m = n == 0 ? 0 : rows.front().size();
  std::vector<Tolerance> flat;
  flat.reserve(n * m);
  for (const auto& r : rows) {
    if (r.size() != m) throw std::invalid_argument("ragged tolerance matrix");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return Instance(n, m, std::move(flat));
}

std::vector<std::vector<Tolerance>> Instance::rows() const {
  std::vector<std::vector<Tolerance>> out(jobs_);
  for (std::size_t j = 0; j < jobs_; ++j) {
    auto r = row(j);
    out[j].assign(r.begin(), r.end());
  }
  return out;
}

Instance Instance::permuted(std::span<const std::size_t> job_order,
                            std::span<const std::size_t> machine_order) const {
  if (job_order.size() != jobs_ || machine_order.size() != machines_) {
    throw std::invalid_argument("permutation length does not match instance");
  }
  std::vector<Tolerance> flat;
  flat.reserve(tolerances_.size());
  for (std::size_t p : job_order) {
    for (std::size_t q : machine_order) flat.push_back((*this)(p, q));
  }
  return Instance(jobs_, machines_, std::move(flat));
}

Matching::Matching(std::vector<Edge> edges) : edges_(std::move(edges)) {
  std::sort(edges_.begin(), edges_.end());
}

void Matching::add(Edge e) {
  edges_.insert(std::upper_bound(edges_.begin(), edges_.end(), e), e);
}

std::vector<std::size_t> Matching::degrees(std::size_t machines) const {
  std::vector<std::size_t> d(machines, 0);
  for (const Edge& e : edges_) {
    if (e.machine < machines) ++d[e.machine];
  }
  return d;
}

std::vector<std::optional<std::size_t>> Matching::assignment(std::size_t jobs) const {
  std::vector<std::optional<std::size_t>> out(jobs);
  for (const Edge& e : edges_) {
    if (e.job < jobs && !out[e.job]) out[e.job] = e.machine;
  }
  return out;
}

Matching from_assignment(std::span<const std::optional<std::size_t>> machine_of) {
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < machine_of.size(); ++j) {
    if (machine_of[j]) edges.push_back({j, *machine_of[j]});
  }
  return Matching(std::move(edges));
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::JobMatchedTwice: return "job-matched-twice";
    case ViolationKind::IndexOutOfRange: return "index-out-of-range";
    case ViolationKind::ToleranceExceeded: return "tolerance-exceeded";
  }
  return "unknown";
}

ValidityReport verify(const Instance& inst, const Matching& matching) {
  ValidityReport report;
  const auto deg = matching.degrees(inst.machines());
  std::vector<bool> seen(inst.jobs(), false);
  for (const Edge& e : matching.edges()) {
    if (e.job >= inst.jobs() || e.machine >= inst.machines()) {
      report.violations.push_back({ViolationKind::IndexOutOfRange, e, 0});
      continue;
    }
    if (seen[e.job]) {
      report.violations.push_back({ViolationKind::JobMatchedTwice, e, deg[e.machine]});
    }
    seen[e.job] = true;
    if (static_cast<Tolerance>(deg[e.machine]) > inst(e.job, e.machine)) {
      report.violations.push_back({ViolationKind::ToleranceExceeded, e, deg[e.machine]});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

namespace {

void require_valid(const Instance& inst, const Matching& matching, const char* what) {
  if (!verify(inst, matching).valid) {
    throw InvalidMatching(std::string(what) + ": matching is not a valid PD-matching");
  }
}

}  // namespace

bool is_maximal(const Instance& inst, const Matching& matching) {
  require_valid(inst, matching, "is_maximal");
  const std::size_t m = inst.machines();
  const auto deg = matching.degrees(m);
  const auto machine_of = matching.assignment(inst.jobs());

  // Smallest tolerance among jobs already on each machine.
  std::vector<Tolerance> min_hosted(m, std::numeric_limits<Tolerance>::max());
  for (const Edge& e : matching.edges()) {
    min_hosted[e.machine] = std::min(min_hosted[e.machine], inst(e.job, e.machine));
  }

  for (std::size_t j = 0; j < inst.jobs(); ++j) {
    if (machine_of[j]) continue;  // adding a second edge for j is never valid
    for (std::size_t i = 0; i < m; ++i) {
      const auto grown = static_cast<Tolerance>(deg[i] + 1);
      if (inst(j, i) > 0 && grown <= inst(j, i) && grown <= min_hosted[i]) return false;
    }
  }
  return true;
}

bool is_strongly_maximal(const Instance& inst, const Matching& matching) {
  require_valid(inst, matching, "is_strongly_maximal");
  const auto deg = matching.degrees(inst.machines());
  const auto machine_of = matching.assignment(inst.jobs());
  for (std::size_t j = 0; j < inst.jobs(); ++j) {
    if (machine_of[j]) continue;
    for (std::size_t i = 0; i < inst.machines(); ++i) {
      if (inst(j, i) > static_cast<Tolerance>(deg[i])) return false;
    }
  }
  return true;
}

}  // namespace pdmatch
