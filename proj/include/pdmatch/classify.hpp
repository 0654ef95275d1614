#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pdmatch/instance.hpp"

namespace pdmatch {

/// Orders witnessing monotonicity: position p of the monotone matrix is
/// original job jobs[p]; position q is original machine machines[q].
/// Jobs are listed from least to most tolerant, machines from least to most
/// capable.
struct MonotoneWitness {
  std::vector<std::size_t> jobs;
  std::vector<std::size_t> machines;
};

/// Jobs sharing one tolerance row.
struct TypeProfile {
  std::vector<Tolerance> tau;           // length m
  std::vector<std::size_t> members;     // job indices, ascending
  std::size_t count() const { return members.size(); }
};

struct ClassReport {
  std::optional<MonotoneWitness> monotonizable;

  bool is_udep = false;
  std::vector<Tolerance> job_tolerance;                // b_j (0 if the row is all zero)
  std::vector<std::vector<std::size_t>> job_machines;  // V_j

  bool is_vdep = false;
  std::vector<Tolerance> machine_tolerance;            // b_i (0 if the column is all zero)
  std::vector<std::vector<std::size_t>> machine_jobs;  // U_i

  bool udep_complete = false;  // U-dep with every V_j = V
  std::vector<Tolerance> tolerance_set;  // sorted distinct entries
  std::size_t type_count = 0;
  std::vector<TypeProfile> types;        // ordered by first member
  std::vector<std::size_t> type_of;      // job -> index into types

  bool uniform() const { return tolerance_set.size() == 1 && tolerance_set.front() > 0; }
};

/// True iff the matrix is non-decreasing along every row and every column.
bool is_monotone(const Instance& inst);

/// Sort jobs by (row sum, row lexicographic, index) and machines by
/// (column sum, column lexicographic, index); return the orders if the
/// permuted matrix is monotone. Rows of a monotonizable matrix form a chain
/// under componentwise order regardless of column order, so this finds a
/// witness whenever one exists.
std::optional<MonotoneWitness> find_monotone_order(const Instance& inst);

/// Groups jobs by identical tolerance rows.
std::vector<TypeProfile> job_types(const Instance& inst);

ClassReport classify(const Instance& inst);

}  // namespace pdmatch
