#include <gtest/gtest.h>

#include <random>

#include "pdmatch/errors.hpp"
#include "pdmatch/generators.hpp"
#include "pdmatch/oracle.hpp"
#include "support/brute.hpp"

using namespace pdmatch;

TEST(Oracle, Fixtures) {
  EXPECT_EQ(oracle_enumerate_assignments(fixture_ir(3)).size(), 3u);
  EXPECT_EQ(oracle_enumerate_assignments(fixture_tight(2)).size(), 4u);
  EXPECT_EQ(oracle_enumerate_assignments(Instance(3, 2, std::vector<Tolerance>(6, 0))).size(), 0u);
  EXPECT_EQ(oracle_threshold_vectors(fixture_ir(3)).size(), 3u);
  EXPECT_EQ(oracle_threshold_vectors(fixture_monobad(2)).size(), 4u);
}

TEST(Oracle, SeededCrossCheck) {
  const Instance inst = gen_random(8, 3, 4, 0.2, 2024);
  EXPECT_EQ(oracle_threshold_vectors(inst).size(), oracle_enumerate_assignments(inst).size());
}

TEST(Oracle, Budgets) {
  EXPECT_THROW(oracle_enumerate_assignments(gen_random(20, 4, 3, 0, 1), 1'000'000), BudgetExceeded);
  EXPECT_THROW(oracle_threshold_vectors(gen_random(20, 6, 9, 0, 1), 1000), BudgetExceeded);
  EXPECT_TRUE(oracle_enumerate_assignments(Instance(0, 0, {})).empty());
  EXPECT_TRUE(oracle_threshold_vectors(Instance(4, 0, {})).empty());
}

TEST(OracleProperty, AgreesWithUnprunedEnumerationAndIsMaximal) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 500; ++it) {
    const Instance inst = gen_random(rng() % 8, 1 + rng() % 3, 4, 0.25, rng());
    const Matching a = oracle_enumerate_assignments(inst);
    const Matching b = oracle_threshold_vectors(inst);
    ASSERT_TRUE(verify(inst, a).valid);
    ASSERT_TRUE(verify(inst, b).valid);
    EXPECT_TRUE(is_maximal(inst, a));
    EXPECT_TRUE(is_maximal(inst, b));
    const std::size_t expect = brute::max_pd_matching(inst);
    EXPECT_EQ(a.size(), expect);
    EXPECT_EQ(b.size(), expect);
  }
}

TEST(OracleProperty, LargerInstancesAgainstUnprunedEnumeration) {
  std::mt19937_64 rng(43);
  for (int it = 0; it < 8; ++it) {
    const Instance inst = gen_random(9, 4, 4, 0.3, rng());
    const std::size_t expect = brute::max_pd_matching(inst);
    EXPECT_EQ(oracle_enumerate_assignments(inst).size(), expect);
    EXPECT_EQ(oracle_threshold_vectors(inst).size(), expect);
  }
}
