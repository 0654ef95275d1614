#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "pdmatch/generators.hpp"
#include "pdmatch/greedy.hpp"
#include "pdmatch/oracle.hpp"
#include "support/brute.hpp"

using namespace pdmatch;

TEST(Greedy, IrTakesTheTolerantJobs) {
  const Matching m = greedy_strongly_maximal(fixture_ir(3));
  EXPECT_EQ(m, Matching({{1, 0}, {2, 0}, {3, 0}}));
}

TEST(Greedy, TightAdversarialOrderHitsHalf) {
  const Matching m = greedy_strongly_maximal(fixture_tight(2), {{1, 0}, TieBreak::HighestIndexFirst});
  EXPECT_EQ(m, Matching({{2, 1}, {3, 1}}));
}

TEST(Greedy, EmptyInstance) {
  EXPECT_TRUE(greedy_strongly_maximal(Instance(0, 0, {})).empty());
  EXPECT_TRUE(greedy_global(Instance(3, 0, {})).empty());
}

TEST(Greedy, RejectsNonPermutationOrder) {
  EXPECT_THROW(greedy_strongly_maximal(fixture_tight(2), {{0, 0}, TieBreak::LowestIndexFirst}),
               std::invalid_argument);
  EXPECT_THROW(greedy_strongly_maximal(fixture_tight(2), {{0}, TieBreak::LowestIndexFirst}), std::invalid_argument);
}

TEST(GreedyGlobal, Examples) {
  EXPECT_EQ(greedy_global(fixture_ir(3)).size(), 3u);
  EXPECT_TRUE(greedy_global(Instance(2, 2, {0, 0, 0, 0})).empty());
  const Matching tight =
      greedy_global(fixture_tight(2), {TieBreak::HighestIndexFirst, TieBreak::HighestIndexFirst});
  EXPECT_EQ(tight.size(), 2u);
}

TEST(GreedyProperty, StronglyMaximalHalfApproxAndChosenK) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 600; ++it) {
    const Instance inst = gen_random(rng() % 9, 1 + rng() % 3, 4, 0.2, rng());
    const std::size_t opt = brute::max_pd_matching(inst);
    std::vector<std::size_t> order(inst.machines());
    std::iota(order.begin(), order.end(), 0);
    do {
      for (TieBreak tb : {TieBreak::LowestIndexFirst, TieBreak::HighestIndexFirst}) {
        const Matching m = greedy_strongly_maximal(inst, {order, tb});
        ASSERT_TRUE(verify(inst, m).valid);
        EXPECT_TRUE(is_strongly_maximal(inst, m));
        EXPECT_GE(2 * m.size(), opt);
        // Re-scan: each machine's degree is the h-index of the jobs still
        // unmatched when it was processed.
        std::vector<bool> taken(inst.jobs(), false);
        const auto machine_of = m.assignment(inst.jobs());
        const auto deg = m.degrees(inst.machines());
        for (std::size_t i : order) {
          std::vector<Tolerance> avail;
          for (std::size_t j = 0; j < inst.jobs(); ++j) {
            if (!taken[j]) avail.push_back(inst(j, i));
          }
          EXPECT_EQ(deg[i], brute::h_index(avail));
          for (std::size_t j = 0; j < inst.jobs(); ++j) taken[j] = taken[j] || machine_of[j] == i;
        }
      }
    } while (std::next_permutation(order.begin(), order.end()));
    const Matching g = greedy_global(inst);
    EXPECT_TRUE(verify(inst, g).valid);
    EXPECT_TRUE(is_strongly_maximal(inst, g));
  }
}

TEST(GreedyProperty, TieBreakPicksHighestTolerances) {
  const Instance inst = Instance::from_rows({{2}, {2}, {2}});
  EXPECT_EQ(greedy_strongly_maximal(inst, {{}, TieBreak::LowestIndexFirst}), Matching({{0, 0}, {1, 0}}));
  EXPECT_EQ(greedy_strongly_maximal(inst, {{}, TieBreak::HighestIndexFirst}), Matching({{1, 0}, {2, 0}}));
}
