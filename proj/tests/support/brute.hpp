#pragma once

// Deliberately naive reference implementations. None of them share code
// with the library beyond the Instance container.

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "pdmatch/generators.hpp"
#include "pdmatch/instance.hpp"
#include "pdmatch/primitives.hpp"

namespace brute {

using pdmatch::Instance;
using pdmatch::Tolerance;

/// PD-matching check straight from the definition, on a job -> machine
/// assignment (-1 for unmatched).
bool is_pd_matching(const Instance& inst, const std::vector<int>& machine_of);

/// Maximum PD-matching size by trying all (m+1)^n assignments, no pruning.
std::size_t max_pd_matching(const Instance& inst);

/// Largest edge subset obeying left degree <= 1 and right caps, by
/// enumerating all edge subsets.
std::size_t max_b_matching(const pdmatch::CapacitatedBipartiteGraph& g);

/// Maximum matching size in a general graph by recursion over edges.
std::size_t max_general_matching(const pdmatch::GeneralGraph& g);

/// True iff some job and machine permutation makes the matrix monotone.
bool monotonizable(const Instance& inst);

/// Exhaustive 3-partition decision.
bool has_3partition(const std::vector<Tolerance>& values, Tolerance bound);

/// Exhaustive perfect 3-dimensional matching decision.
bool has_perfect_3dm(const pdmatch::TripleSystem& ts);

/// True iff `chosen` is k triples covering every x, y and z exactly once.
bool is_perfect_3dm(const pdmatch::TripleSystem& ts, const std::vector<std::array<std::size_t, 3>>& chosen);

/// Exhaustive perfect d-dimensional matching decision.
bool has_perfect_ddm(const pdmatch::TupleSystem& ts);

/// Maximum over every threshold vector in [0, n]^m (no candidate pruning) of
/// the capped matching with edges b(j, i) >= d_i, via simple augmenting paths.
std::size_t unpruned_threshold_optimum(const Instance& inst);

/// Largest k such that k of the given values are >= k.
std::size_t h_index(std::vector<Tolerance> values);

}  // namespace brute
