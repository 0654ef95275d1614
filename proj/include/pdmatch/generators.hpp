#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pdmatch/instance.hpp"

namespace pdmatch {

// All random generators are deterministic for a fixed seed and throw
// std::invalid_argument on out-of-range parameters.

/// Entries are 0 with probability zero_prob, else uniform in [1, max_tol].
Instance gen_random(std::size_t n, std::size_t m, Tolerance max_tol, double zero_prob, std::uint64_t seed);

/// Monotone matrix (rows and columns non-decreasing in index order) with
/// entries in [0, max_tol], from cumulated random increments.
Instance gen_monotonous(std::size_t n, std::size_t m, Tolerance max_tol, std::uint64_t seed);

/// Entries drawn uniformly from `values`.
Instance gen_tolerance_set(std::size_t n, std::size_t m, std::span<const Tolerance> values, std::uint64_t seed);

/// Monotone matrix with entries drawn from `values`.
Instance gen_mono_tolerance_set(std::size_t n, std::size_t m, std::span<const Tolerance> values,
                                std::uint64_t seed);

/// U-dependent: job j has b_j in [1, max_tol] on a random machine set V_j
/// (every machine when complete is set).
Instance gen_udep(std::size_t n, std::size_t m, Tolerance max_tol, bool complete, std::uint64_t seed);

/// Monotone U-dependent: b_j non-decreasing and V_j a growing machine suffix.
Instance gen_udep_mono(std::size_t n, std::size_t m, Tolerance max_tol, std::uint64_t seed);

/// V-dependent: machine i has b_i in [1, max_tol]; each entry of column i is
/// b_i, or 0 with probability zero_prob.
Instance gen_vdep(std::size_t n, std::size_t m, Tolerance max_tol, double zero_prob, std::uint64_t seed);

/// At most t job types: t random rows with entries in [0, max_tol], each job
/// picks one.
Instance gen_types(std::size_t n, std::size_t m, std::size_t t, Tolerance max_tol, std::uint64_t seed);

/// 3-partition reduction. Requires |A| = 3k, sum A = kB and B/4 < x < B/2.
/// Jobs of type l = 1..k (l*B of them) have row (l*x_1, ..., l*x_3k).
Instance gen_3partition(std::span<const Tolerance> values, Tolerance bound, std::size_t k);

struct TripleSystem {
  std::size_t k = 0;
  std::vector<std::array<std::size_t, 3>> triples;
};

/// Throws std::invalid_argument unless indices are < k and each element
/// occurs in at most three triples.
void validate(const TripleSystem& ts);

/// Random system of `count` distinct triples over [0, k) respecting the
/// occurrence bound (fewer if the bound runs out). Every x occurs once
/// count >= k.
TripleSystem gen_triple_system(std::size_t k, std::size_t count, std::uint64_t seed);

/// Role of a job in a 3DM reduction instance.
struct JobRole {
  enum class Kind { YElement, ZElement, Dummy };
  Kind kind;
  std::size_t element;  // the y or z index, or the x index a dummy stands for
};

struct Reduction3dm {
  Instance instance;
  std::vector<JobRole> roles;                            // per job
  std::vector<std::array<std::size_t, 3>> machine_triples;  // per machine
};

/// One machine per triple. Element jobs for Y and Z with tolerance 2 on the
/// triples containing them; for each x_a occurring in t_a triples, t_a - 1
/// dummies with tolerance 1 on those triples. Throws std::invalid_argument
/// if some x occurs in no triple, since the dummy count is then undefined.
Reduction3dm gen_3dm(const TripleSystem& ts);

/// Triples of the machines hosting exactly two jobs. Throws InvalidMatching
/// if `matching` is not a PD-matching of the reduction instance.
std::vector<std::array<std::size_t, 3>> extract_3dm_solution(const Reduction3dm& reduction,
                                                            const Matching& matching);

struct TupleSystem {
  std::size_t d = 0;
  std::size_t k = 0;
  std::vector<std::vector<std::size_t>> tuples;
};

/// Throws std::invalid_argument unless tuples have arity d, indices are
/// < k, tuples are distinct, and each element occurs at most d times.
void validate(const TupleSystem& ts);

/// Random system of `count` distinct d-tuples respecting the occurrence bound.
TupleSystem gen_tuple_system(std::size_t d, std::size_t k, std::size_t count, std::uint64_t seed);

/// d-dimensional matching reduction with T = {k1, k2}: one machine per
/// tuple, one element job per (axis, element) with tolerance k2 on tuples
/// containing it and k1 elsewhere, plus k1 * (t - k) dummies of tolerance k1.
/// Requires d = k2, k1 >= 1, k2 > max(2, k1) and t >= k. Element jobs come
/// first, axis-major.
Instance gen_ddm(const TupleSystem& ts, Tolerance k1, Tolerance k2);

/// Named instances: "IR" (param r), "TIGHT" (param k), "MONOBAD" (param k),
/// "3PART-EXAMPLE" (param ignored). Throws std::invalid_argument otherwise.
Instance fixture(const std::string& name, std::size_t param = 0);

/// IR(r): one job with tolerance 1 and r jobs with tolerance r, one machine.
Instance fixture_ir(std::size_t r);
/// TIGHT(k): k jobs with row [0, k] and k jobs with row [k, k].
Instance fixture_tight(std::size_t k);
/// MONOBAD(k): k+1 machines; k jobs with all ones, k jobs with all ones
/// except k on the last machine.
Instance fixture_monobad(std::size_t k);
/// The 3-partition example with A = {26, 30, 31, 33, 36, 44}, B = 100, k = 2.
Instance fixture_3part_example();

}  // namespace pdmatch
