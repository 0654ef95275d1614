#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "pdmatch/classify.hpp"
#include "pdmatch/dispatch.hpp"
#include "pdmatch/errors.hpp"
#include "pdmatch/exact.hpp"
#include "pdmatch/generators.hpp"
#include "support/brute.hpp"
#include "support/corpus.hpp"

using namespace pdmatch;

namespace {

Instance rows(std::initializer_list<std::vector<Tolerance>> r) { return Instance::from_rows(r); }

std::size_t solve_size(const std::string& algo, const Instance& inst) {
  const Matching m = solve_with(inst, algo).matching;
  EXPECT_TRUE(verify(inst, m).valid) << algo;
  return m.size();
}

}  // namespace

TEST(Vdep, Examples) {
  EXPECT_EQ(solve_vdep(rows({{2, 0}, {2, 0}, {0, 1}})).size(), 3u);
  EXPECT_EQ(solve_vdep(rows({{1}, {1}, {1}})).size(), 1u);
  EXPECT_EQ(solve_vdep(rows({{2, 1}, {2, 1}, {2, 1}})).size(), 3u);
  EXPECT_EQ(brute::max_pd_matching(rows({{2, 1}, {2, 1}, {2, 1}})), 3u);
  EXPECT_THROW(solve_vdep(rows({{1}, {2}})), ClassMismatch);
}

TEST(UdepComplete, Examples) {
  EXPECT_EQ(solve_udep_complete(rows({{3}, {3}, {3}, {3}})).size(), 3u);
  EXPECT_EQ(solve_udep_complete(rows({{3, 3}, {1, 1}, {1, 1}})).size(), 2u);
  EXPECT_EQ(brute::max_pd_matching(rows({{3, 3}, {1, 1}, {1, 1}})), 2u);
  EXPECT_TRUE(solve_udep_complete(Instance(0, 2, {})).empty());
  EXPECT_THROW(solve_udep_complete(rows({{0, 2}})), ClassMismatch);
}

TEST(UdepMono, Examples) {
  EXPECT_EQ(solve_udep_mono(rows({{1}, {2}})), Matching({{1, 0}}));
  EXPECT_EQ(brute::max_pd_matching(rows({{1}, {2}})), 1u);
  EXPECT_EQ(solve_udep_mono(rows({{0, 1}, {1, 1}})), Matching({{0, 1}, {1, 0}}));
  EXPECT_TRUE(solve_udep_mono(Instance(0, 0, {})).empty());
  EXPECT_THROW(solve_udep_mono(rows({{2, 1}})), ClassMismatch);
  EXPECT_THROW(solve_udep_mono(rows({{1, 0}, {0, 1}})), ClassMismatch);
}

TEST(UdepMono, CompactSweepMatchesDense) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Instance inst = gen_udep_mono(9, 4, 5, s);
    std::vector<UdepMonoJob> jobs;
    for (std::size_t j = 0; j < inst.jobs(); ++j) {
      const auto r = inst.row(j);
      const auto first = static_cast<std::size_t>(std::find_if(r.begin(), r.end(), [](Tolerance v) { return v > 0; }) -
                                                  r.begin());
      jobs.push_back({first < r.size() ? r[first] : 0, first});
    }
    EXPECT_EQ(udep_mono_sweep(jobs, inst.machines()).size(), solve_udep_mono(inst).size());
  }
  const UdepMonoJob bad[] = {{2, 0}, {1, 0}};
  EXPECT_THROW(udep_mono_sweep(bad, 1), std::invalid_argument);
}

TEST(MonoGreedy, MonobadAndUdepAgreement) {
  EXPECT_EQ(solve_mono_general_greedy(fixture_monobad(2)).size(), 3u);
  EXPECT_EQ(brute::max_pd_matching(fixture_monobad(2)), 4u);
  std::mt19937_64 rng(7);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const Instance inst = corpus::shuffled(gen_udep_mono(8, 3, 4, s), rng);
    EXPECT_EQ(solve_mono_general_greedy(inst), solve_udep_mono(inst));
  }
  EXPECT_THROW(solve_mono_general_greedy(rows({{1, 2}, {2, 1}})), ClassMismatch);
}

TEST(ConstM, Examples) {
  EXPECT_EQ(solve_const_m(fixture_ir(3)).size(), 3u);
  EXPECT_EQ(solve_const_m(rows({{5}, {5}})).size(), 2u);
  EXPECT_EQ(threshold_vector_count(fixture_3part_example()), 729u);
  EXPECT_THROW(solve_const_m(gen_random(10, 10, 9, 0, 1), 1000), BudgetExceeded);
}

TEST(ConstM, PrunedCandidatesMatchUnprunedEnumeration) {
  std::mt19937_64 rng(8);
  for (int it = 0; it < 300; ++it) {
    const Instance inst = gen_random(rng() % 7, 1 + rng() % 2, 5, 0.2, rng());
    EXPECT_EQ(solve_const_m(inst).size(), brute::unpruned_threshold_optimum(inst));
  }
}

TEST(ConstM, ThresholdMatchingRespectsVector) {
  const Instance inst = rows({{1, 3}, {3, 3}, {3, 1}});
  const Matching m = threshold_matching(inst, {{1, 3}});
  EXPECT_TRUE(verify(inst, m).valid);
  EXPECT_EQ(m.size(), 3u);
  EXPECT_THROW(threshold_matching(inst, {{1}}), std::invalid_argument);
}

TEST(Uniform, Examples) {
  EXPECT_EQ(solve_uniform_tolerance(Instance(5, 2, std::vector<Tolerance>(10, 2))).size(), 4u);
  EXPECT_EQ(solve_uniform_tolerance(Instance(3, 2, std::vector<Tolerance>(6, 2))).size(), 3u);
  EXPECT_TRUE(solve_uniform_tolerance(Instance(0, 2, {})).empty());
  EXPECT_THROW(solve_uniform_tolerance(rows({{1, 2}})), ClassMismatch);
  EXPECT_THROW(solve_uniform_tolerance(rows({{0, 0}})), ClassMismatch);
}

TEST(ZeroK, Examples) {
  EXPECT_EQ(solve_zero_k(rows({{0, 2}, {2, 0}, {2, 2}})).size(), 3u);
  EXPECT_EQ(solve_zero_k(rows({{0, 0}})).size(), 0u);
  EXPECT_EQ(solve_zero_k(rows({{3, 3}, {3, 0}})).size(), 2u);
  EXPECT_EQ(brute::max_pd_matching(rows({{0, 2}, {2, 0}, {2, 2}})), 3u);
  EXPECT_THROW(solve_zero_k(rows({{1, 2}})), ClassMismatch);
}

TEST(OneTwo, Examples) {
  EXPECT_EQ(solve_one_two(rows({{2}, {2}})).size(), 2u);
  EXPECT_EQ(solve_one_two(rows({{1}, {2}})).size(), 1u);
  const Instance four = rows({{2, 1}, {2, 1}, {1, 2}, {1, 2}});
  EXPECT_EQ(solve_one_two(four).size(), 4u);
  EXPECT_EQ(brute::max_pd_matching(four), 4u);
  EXPECT_THROW(solve_one_two(rows({{0, 2}})), ClassMismatch);
  EXPECT_THROW(solve_one_two(rows({{3}})), ClassMismatch);
}

TEST(OneTwo, PairingFeasibilityIsMonotoneInX) {
  for (auto& inst : corpus::in_class("one-two", 300, 9, 9, 4, 2)) {
    const std::size_t top = std::min(inst.jobs() / 2, inst.machines());
    bool previous = true;
    for (std::size_t x = 0; x <= top; ++x) {
      const bool now = one_two_pairing_feasible(inst, x);
      if (now) EXPECT_TRUE(previous) << "x=" << x;
      previous = now;
    }
  }
}

TEST(MonoThreeTol, Examples) {
  EXPECT_EQ(solve_mono_three_tol(fixture_monobad(2)).size(), 4u);
  EXPECT_EQ(solve_mono_three_tol(Instance(7, 2, std::vector<Tolerance>(14, 3))).size(), 6u);
  EXPECT_THROW(solve_mono_three_tol(rows({{1, 2}, {2, 1}})), ClassMismatch);
  EXPECT_THROW(solve_mono_three_tol(rows({{1, 2, 3, 4}})), ClassMismatch);
}

TEST(MonoThreeTol, EveryGuessIsValidAndDominated) {
  std::mt19937_64 rng(10);
  for (auto& inst : corpus::in_class("mono-3tol", 150, 10, 8, 3, 6)) {
    std::size_t best_guess = 0;
    const Matching result = solve_mono_three_tol(inst, kUnlimited, [&](const Matching& m) {
      EXPECT_TRUE(verify(inst, m).valid);
      best_guess = std::max(best_guess, m.size());
    });
    EXPECT_EQ(result.size(), best_guess);
    EXPECT_EQ(result.size(), brute::max_pd_matching(inst));
  }
}

TEST(MonoThreeTol, BudgetIsEnforced) {
  EXPECT_THROW(solve_mono_three_tol(gen_mono_tolerance_set(8, 3, std::vector<Tolerance>{1, 4, 8}, 1), 5),
               BudgetExceeded);
}

TEST(TTypes, Examples) {
  const Instance two = rows({{2, 1}, {2, 1}, {1, 2}, {1, 2}});
  EXPECT_EQ(solve_t_types(two).size(), 4u);
  EXPECT_EQ(solve_two_types(two).size(), 4u);
  const Instance one = rows({{2, 1}, {2, 1}, {2, 1}});
  EXPECT_EQ(solve_t_types(one).size(), solve_vdep(one).size());
  EXPECT_THROW(solve_t_types(rows({{1}, {2}, {3}, {4}})), BudgetExceeded);
  EXPECT_THROW(solve_two_types(rows({{1}, {2}, {3}})), ClassMismatch);
  EXPECT_TRUE(solve_t_types(Instance(0, 3, {})).empty());
}

TEST(TTypes, SharedMachinesNeeded) {
  // One machine must host both types to reach the optimum.
  const Instance inst = rows({{2}, {3}});
  EXPECT_EQ(solve_t_types(inst).size(), 2u);
}

TEST(Normalize, TwoSharedMachinesCollapse) {
  const Instance inst = Instance::from_rows({{2, 2}, {2, 2}, {2, 3}, {2, 3}});
  const Matching m({{0, 0}, {1, 1}, {2, 0}, {3, 1}});
  ASSERT_TRUE(verify(inst, m).valid);
  const Matching out = normalize_shared_machines(inst, m);
  EXPECT_EQ(out.size(), 4u);
  EXPECT_TRUE(verify(inst, out).valid);
  const auto a = out.assignment(4);
  EXPECT_TRUE((a[0] == a[1] && a[2] == a[3]));
}

TEST(Normalize, TrivialCases) {
  const Instance inst = rows({{2, 2}, {2, 2}});
  const Matching single({{0, 0}, {1, 1}});
  EXPECT_EQ(normalize_shared_machines(inst, single), single);
  EXPECT_TRUE(normalize_shared_machines(inst, Matching{}).empty());
  EXPECT_THROW(normalize_shared_machines(rows({{1}, {1}}), Matching({{0, 0}, {1, 0}})), InvalidMatching);
}

TEST(ExactProperty, EverySolverMatchesBruteForce) {
  std::uint64_t seed = 100;
  for (const std::string& algo : corpus::exact_algorithms()) {
    for (const Instance& inst : corpus::in_class(algo, 120, ++seed, 7, 3, 4)) {
      EXPECT_EQ(solve_size(algo, inst), brute::max_pd_matching(inst)) << algo << "\n" << inst.jobs();
    }
  }
}

TEST(ExactProperty, MonotoneOptimumUsesSuffixes) {
  // Some optimum matches exactly the most tolerant jobs and occupies every
  // machine from some point on.
  for (std::uint64_t s = 0; s < 150; ++s) {
    const Instance inst = gen_monotonous(1 + s % 6, 1 + s % 3, 4, s);
    const std::size_t n = inst.jobs(), m = inst.machines();
    const std::size_t opt = brute::max_pd_matching(inst);
    bool found = opt == 0;
    for (std::size_t first = 0; first < m && !found; ++first) {
      // Enumerate assignments of the top `opt` jobs onto machines first..m-1.
      const std::size_t width = m - first;
      std::vector<int> a(n, -1);
      std::vector<std::size_t> pick(opt, 0);
      for (;;) {
        std::fill(a.begin(), a.end(), -1);
        std::vector<bool> used(width, false);
        for (std::size_t p = 0; p < opt; ++p) {
          a[n - opt + p] = static_cast<int>(first + pick[p]);
          used[pick[p]] = true;
        }
        if (std::all_of(used.begin(), used.end(), [](bool u) { return u; }) && brute::is_pd_matching(inst, a)) {
          found = true;
          break;
        }
        std::size_t p = 0;
        while (p < opt && ++pick[p] == width) pick[p++] = 0;
        if (p == opt) break;
      }
    }
    EXPECT_TRUE(found) << "seed " << s;
  }
}

TEST(ExactProperty, NormalizePreservesSizeAndBoundsSharing) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int it = 0; it < 400; ++it) {
    const Instance inst = gen_types(2 + rng() % 8, 2 + rng() % 3, 2, 5, rng());
    // A random valid matching: random assignment repaired by dropping edges.
    std::vector<std::optional<std::size_t>> a(inst.jobs());
    for (auto& x : a) x = rng() % inst.machines();
    Matching m = from_assignment(a);
    while (!verify(inst, m).valid) {
      auto edges = m.edges();
      edges.erase(edges.begin() + static_cast<long>(rng() % edges.size()));
      m = Matching(edges);
    }
    const Matching out = normalize_shared_machines(inst, m);
    EXPECT_TRUE(verify(inst, out).valid);
    EXPECT_EQ(out.size(), m.size());
    const auto types = job_types(inst);
    const auto machine_of = out.assignment(inst.jobs());
    for (std::size_t x = 0; x < types.size(); ++x) {
      for (std::size_t y = x + 1; y < types.size(); ++y) {
        std::size_t shared = 0;
        for (std::size_t i = 0; i < inst.machines(); ++i) {
          auto hosts = [&](std::size_t t) {
            return std::any_of(types[t].members.begin(), types[t].members.end(),
                               [&](std::size_t j) { return machine_of[j] == i; });
          };
          shared += hosts(x) && hosts(y);
        }
        EXPECT_LE(shared, 1u);
      }
    }
    ++checked;
  }
  EXPECT_GE(checked, 200);
}
