#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "pdmatch/instance.hpp"

namespace pdmatch {

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

/// Per-machine degree thresholds d_1..d_m.
struct ThresholdVector {
  std::vector<std::size_t> thresholds;
};

// Every solver below is exact for its class and throws ClassMismatch when
// the instance lies outside it. Solvers that enumerate throw BudgetExceeded
// instead of running past their budget.

/// V-dependent tolerances: b-matching with machine caps b_i on the edges
/// where b(j, i) = b_i > 0.
Matching solve_vdep(const Instance& inst);

/// U-dependent tolerances with every job allowed everywhere: jobs sorted by
/// tolerance, each machine takes the longest feasible prefix of the
/// remaining jobs.
Matching solve_udep_complete(const Instance& inst);

/// Monotonizable U-dependent tolerances: the most tolerant unmatched job is
/// placed on the least capable machine that still fits it; a machine that
/// does not fit is never revisited.
Matching solve_udep_mono(const Instance& inst);

/// A job of a monotone U-dependent instance in compact form: tolerance b_j
/// on machines first_machine..m-1 (in capability order), 0 elsewhere.
struct UdepMonoJob {
  Tolerance tolerance = 0;
  std::size_t first_machine = 0;
};

/// The sweep of solve_udep_mono on compact input, for instances too large
/// for a dense matrix. Jobs are listed least tolerant first: tolerances
/// non-decreasing and first_machine non-increasing (std::invalid_argument
/// otherwise). Edge job indices refer to positions in `jobs`. O(n + m).
Matching udep_mono_sweep(std::span<const UdepMonoJob> jobs, std::size_t machines);

/// The same sweep on any monotonizable instance, with admission test
/// b(j, i) > d_i. Valid but not optimal in general.
Matching solve_mono_general_greedy(const Instance& inst);

/// Candidate thresholds for one machine: 0 plus every distinct nonzero
/// value in its column, ascending.
std::vector<std::vector<Tolerance>> threshold_candidates(const Instance& inst);

/// Number of threshold vectors solve_const_m would enumerate (saturating).
std::uint64_t threshold_vector_count(const Instance& inst);

/// Largest matching in which every machine i has degree <= t_i and uses
/// only edges with b(j, i) >= t_i.
Matching threshold_matching(const Instance& inst, const ThresholdVector& t);

/// Maximizes threshold_matching over all candidate threshold vectors.
Matching solve_const_m(const Instance& inst, std::uint64_t budget = 10'000'000);

/// Every entry equals one k >= 1: k jobs per machine, min(n, k*m) in total.
Matching solve_uniform_tolerance(const Instance& inst);

/// Entries drawn from {0, k}: the V-dependent case with every cap k.
Matching solve_zero_k(const Instance& inst);

/// True iff the gadget graph for x paired machines has a perfect matching,
/// i.e. some PD-matching places exactly 2x jobs on x machines in pairs.
/// Requires entries in {1, 2}.
bool one_two_pairing_feasible(const Instance& inst, std::size_t x);

/// Entries drawn from {1, 2}: binary search for the most machines that can
/// host a tolerance-2 pair, then one extra job on every empty machine.
Matching solve_one_two(const Instance& inst);

/// Monotonizable instances with at most three distinct tolerances. Guesses
/// the matched job count, the capable machine block, and up to |T|-1
/// machines with a degree strictly between tolerance values, then fills the
/// remaining block greedily. `on_guess` (if set) observes each guess's
/// matching, in the original indexing.
Matching solve_mono_three_tol(const Instance& inst, std::uint64_t budget = kUnlimited,
                              const std::function<void(const Matching&)>& on_guess = {});

/// Rewrites a valid matching so that, for every pair of job types, at most
/// one machine hosts jobs of both. Size and validity are preserved.
Matching normalize_shared_machines(const Instance& inst, const Matching& matching);

/// Instances with at most max_t job types: guesses the machines that host
/// several types together with their per-type counts, and assigns the rest
/// one type per machine with a knapsack-style table over remaining counts.
/// Throws BudgetExceeded if there are more than max_t types or the guess
/// count exceeds budget.
Matching solve_t_types(const Instance& inst, std::size_t max_t = 3,
                       std::uint64_t budget = kUnlimited);

/// At most two job types; same algorithm as solve_t_types with t = 2.
Matching solve_two_types(const Instance& inst);

}  // namespace pdmatch
