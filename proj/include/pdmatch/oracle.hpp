#pragma once

#include <cstdint>

#include "pdmatch/instance.hpp"

namespace pdmatch {

/// Exhaustive search over job-to-machine assignments (each job to a machine
/// or unmatched) with feasibility and bound pruning. Requires
/// (m+1)^n <= budget, else BudgetExceeded.
Matching oracle_enumerate_assignments(const Instance& inst, std::uint64_t budget = 100'000'000);

/// Maximum over threshold vectors (0 or a column value per machine) of a
/// capacitated bipartite matching, computed with its own augmenting-path
/// routine. Requires the threshold-vector count <= budget.
Matching oracle_threshold_vectors(const Instance& inst, std::uint64_t budget = 10'000'000);

}  // namespace pdmatch
