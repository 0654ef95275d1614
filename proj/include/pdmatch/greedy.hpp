#pragma once

#include <cstddef>
#include <vector>

#include "pdmatch/instance.hpp"

namespace pdmatch {

enum class TieBreak { LowestIndexFirst, HighestIndexFirst };

struct GreedyConfig {
  /// Machines in processing order; empty means ascending index.
  std::vector<std::size_t> machine_order;
  /// Among jobs with equal tolerance, which are preferred.
  TieBreak job_tiebreak = TieBreak::LowestIndexFirst;
};

/// Processes machines in cfg order. Each machine takes the k unmatched jobs
/// of highest tolerance on it, where k is the largest value such that k
/// unmatched jobs have tolerance >= k. The result is strongly maximal and
/// hence at least half the optimum. Throws std::invalid_argument if
/// machine_order is not a permutation.
Matching greedy_strongly_maximal(const Instance& inst, const GreedyConfig& cfg = {});

struct GlobalGreedyConfig {
  TieBreak job_tiebreak = TieBreak::LowestIndexFirst;
  TieBreak machine_tiebreak = TieBreak::LowestIndexFirst;
};

/// Repeatedly matches the admissible pair (unmatched j, d_i < b(j, i)) of
/// globally largest tolerance until none remains.
Matching greedy_global(const Instance& inst, const GlobalGreedyConfig& cfg = {});

}  // namespace pdmatch
