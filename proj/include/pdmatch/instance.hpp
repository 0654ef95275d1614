#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pdmatch {

using Tolerance = std::int64_t;

/// An instance of maximum PD-matching: n jobs, m machines and an n x m
/// matrix of tolerances. b(j, i) is the largest degree machine i may have
/// while hosting job j; 0 forbids the pair.
class Instance {
 public:
  Instance() = default;

  /// Throws std::invalid_argument if the matrix does not hold n*m
  /// nonnegative entries.
  Instance(std::size_t jobs, std::size_t machines, std::vector<Tolerance> row_major);

  static Instance from_rows(const std::vector<std::vector<Tolerance>>& rows);

  std::size_t jobs() const { return jobs_; }
  std::size_t machines() const { return machines_; }
  bool empty() const { return jobs_ == 0 || machines_ == 0; }

  Tolerance operator()(std::size_t job, std::size_t machine) const {
    return tolerances_[job * machines_ + machine];
  }
  std::span<const Tolerance> row(std::size_t job) const {
    return {tolerances_.data() + job * machines_, machines_};
  }
  const std::vector<Tolerance>& data() const { return tolerances_; }
  std::vector<std::vector<Tolerance>> rows() const;

  /// The instance obtained by reordering jobs and machines: entry (p, q) of
  /// the result is b(job_order[p], machine_order[q]).
  Instance permuted(std::span<const std::size_t> job_order,
                    std::span<const std::size_t> machine_order) const;

  bool operator==(const Instance&) const = default;

 private:
  std::size_t jobs_ = 0;
  std::size_t machines_ = 0;
  std::vector<Tolerance> tolerances_;
};

struct Edge {
  std::size_t job = 0;
  std::size_t machine = 0;

  auto operator<=>(const Edge&) const = default;
};

/// A set of (job, machine) edges kept sorted by job, then machine. The
/// container does not enforce validity; see verify().
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<Edge> edges);

  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  const std::vector<Edge>& edges() const { return edges_; }

  void add(Edge e);

  /// d_i(M) for every machine. Edges with an out-of-range machine are ignored.
  std::vector<std::size_t> degrees(std::size_t machines) const;

  /// Machine of every job, or nullopt for unmatched jobs. Later duplicates
  /// of a job are ignored.
  std::vector<std::optional<std::size_t>> assignment(std::size_t jobs) const;

  bool operator==(const Matching&) const = default;

 private:
  std::vector<Edge> edges_;
};

/// Builds a matching from a per-job assignment vector.
Matching from_assignment(std::span<const std::optional<std::size_t>> machine_of);

enum class ViolationKind { JobMatchedTwice, IndexOutOfRange, ToleranceExceeded };

std::string to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind;
  Edge edge;
  std::size_t degree = 0;  // degree of edge.machine in M (0 when out of range)

  bool operator==(const Violation&) const = default;
};

struct ValidityReport {
  bool valid = true;
  std::vector<Violation> violations;
};

/// Checks that every job is matched at most once and every edge (j, i)
/// satisfies d_i(M) <= b(j, i). Invalid matchings are reported, not rejected.
ValidityReport verify(const Instance& inst, const Matching& matching);

/// True iff no single edge with positive tolerance can be added while
/// keeping M a PD-matching. Throws InvalidMatching if M is invalid.
bool is_maximal(const Instance& inst, const Matching& matching);

/// True iff every unmatched job j has b(j, i) <= d_i(M) on every machine.
/// Throws InvalidMatching if M is invalid.
bool is_strongly_maximal(const Instance& inst, const Matching& matching);

}  // namespace pdmatch
