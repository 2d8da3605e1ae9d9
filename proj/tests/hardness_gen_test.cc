#include "swapbribery/hardness_gen.h"

#include <gtest/gtest.h>

#include "swapbribery/errors.h"
#include "swapbribery/generic_solvers.h"
#include "swapbribery/rule_solvers.h"
#include "test_util.h"

namespace swapbribery {
namespace {

const X3CInstance kYes{2, {{0, 1, 2}, {0, 3, 4}, {3, 4, 5}}};
const X3CInstance kNo{2, {{0, 1, 2}, {0, 3, 4}, {2, 4, 5}}};

Candidate Named(const BriberyInstance& instance, const std::string& name) {
  return instance.election.candidates().index_of(name);
}

TEST(X3CTest, Validation) {
  EXPECT_NO_THROW(kYes.Validate());
  EXPECT_THROW((X3CInstance{2, {{0, 1, 1}}}.Validate()), ParameterError);
  EXPECT_THROW((X3CInstance{1, {{0, 1, 3}}}.Validate()), ParameterError);
  EXPECT_THROW((X3CInstance{0, {}}.Validate()), ParameterError);
}

TEST(X3CTest, Check) {
  EXPECT_TRUE(x3c_check(kYes));
  EXPECT_FALSE(x3c_check(kNo));
  EXPECT_FALSE(x3c_check(X3CInstance{1, {}}));
  EXPECT_THROW(x3c_check(random_x3c(3, 12, 1, false), 10), CapacityError);
}

TEST(X3CTest, RandomAgainstBitmaskSearch) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    X3CInstance x3c = random_x3c(1 + seed % 3, 2 + seed % 6, seed, seed % 4 == 0);
    EXPECT_EQ(x3c_check(x3c), testing::BruteExactCover(x3c)) << seed;
    if (seed % 4 == 0) {
      EXPECT_TRUE(x3c_check(x3c));
    }
  }
}

TEST(BicliqueTest, RandomAgainstBruteForce) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    BBInstance bb = random_bb(1 + seed % 4, 1 + seed % 2, 0.6, seed);
    if (bb.k > bb.n) continue;
    EXPECT_EQ(balanced_biclique_check(bb), testing::BruteBiclique(bb)) << seed;
  }
  EXPECT_THROW((BBInstance{2, 3, {}}.Validate()), ParameterError);
  EXPECT_THROW((BBInstance{2, 1, {{0, 2}}}.Validate()), ParameterError);
}

TEST(ThreeApprovalGenTest, ScoresAndPrices) {
  ReductionInstance out = gen_x3c_3approval(kYes);
  const BriberyInstance& instance = out.instance;
  EXPECT_EQ(out.target_budget, 2);
  EXPECT_EQ(out.expected_feasible, true);
  // Ground occurrences are 2,1,1,2,2,1, so T = 2.
  const auto points = scores(instance.election, instance.rule);
  EXPECT_EQ(points[0], ScoreValue(2));
  for (int x = 1; x <= 6; ++x) {
    EXPECT_EQ(points[Named(instance, "b" + std::to_string(x))], ScoreValue(3));
  }
  const SwapPriceFn& first = instance.swap_prices[0];
  EXPECT_EQ(first(Named(instance, "b1"), Named(instance, "d1")), Cost(0));
  EXPECT_EQ(first(Named(instance, "b3"), Named(instance, "d1")), Cost(1));
  EXPECT_EQ(first(Named(instance, "b1"), 0), Cost(2));
  EXPECT_TRUE(instance.swap_prices.back()(Named(instance, "b1"), 0).forbidden());
  EXPECT_THROW(gen_x3c_3approval(X3CInstance{1, {{0, 1, 2}}}), ParameterError);
}

TEST(ThreeApprovalGenTest, WiderApprovalAddsLockedPrefix) {
  ReductionInstance out = gen_x3c_3approval(kYes, 5);
  const auto points = scores(out.instance.election, out.instance.rule);
  EXPECT_EQ(points[0], ScoreValue(2));
  EXPECT_EQ(out.instance.election.vote(0).at(0), Named(out.instance, "g1"));
  EXPECT_TRUE(exact_oracle(out.instance).has_value());
}

TEST(ThreeApprovalGenTest, LabelsMatchSolver) {
  for (const X3CInstance& x3c : {kYes, kNo}) {
    ReductionInstance out = gen_x3c_3approval(x3c);
    EXPECT_EQ(exact_oracle(out.instance).has_value(), *out.expected_feasible);
  }
}

TEST(BordaGenTest, Scores) {
  ReductionInstance out = gen_x3c_borda_shift(kYes);
  const auto points = scores(out.instance.election, out.instance.rule);
  // L = 3KM = 18.
  EXPECT_EQ(points[0], ScoreValue(18));
  for (Candidate b = 1; b <= 6; ++b) EXPECT_EQ(points[b], ScoreValue(25));
  EXPECT_EQ(out.instance.shift_prices[0](1), Cost(1));
  EXPECT_EQ(out.instance.shift_prices.back()(1), Cost(3));
  for (const X3CInstance& x3c : {kYes, kNo}) {
    EXPECT_EQ(solve_shift_exact(gen_x3c_borda_shift(x3c).instance).has_value(),
              x3c_check(x3c));
  }
}

TEST(BicliqueGenTest, PricesAndLabels) {
  BBInstance bb{2, 1, {{0, 1}}};
  ReductionInstance out = gen_bb_kapproval(bb);
  const BriberyInstance& instance = out.instance;
  EXPECT_EQ(instance.rule.approval_width(instance.election.num_candidates()), 3);
  EXPECT_EQ(instance.budget, 1);
  const SwapPriceFn& price = instance.swap_prices[0];
  const Candidate u1 = Named(instance, "u1"), w1 = Named(instance, "w1"),
                  w2 = Named(instance, "w2");
  EXPECT_EQ(price(u1, w2), Cost(0));
  EXPECT_EQ(price(u1, w1), Cost(2));
  EXPECT_EQ(price(w1, 0), Cost(1));
  EXPECT_EQ(price(u1, 0), Cost(0));
  EXPECT_TRUE(price(w1, u1).forbidden());
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    BBInstance random = random_bb(2 + seed % 2, 1 + seed % 2, 0.5, seed);
    ReductionInstance gen = gen_bb_kapproval(random);
    EXPECT_EQ(exact_oracle(gen.instance).has_value(), testing::BruteBiclique(random)) << seed;
  }
}

TEST(MaximinGenTest, HeadToHeadTable) {
  ReductionInstance out = gen_x3c_maximin_shift(kYes);
  const BriberyInstance& instance = out.instance;
  const int m = instance.election.num_candidates();
  const auto wins = pairwise_wins(instance.election);
  // M = 3, K = L = 2.
  const Candidate p = 0, t = Named(instance, "t"), c = Named(instance, "c"),
                  b = Named(instance, "b1");
  EXPECT_EQ(wins[p * m + t], 5);
  EXPECT_EQ(wins[p * m + c], 7);
  EXPECT_EQ(wins[t * m + p], 9);
  EXPECT_EQ(wins[t * m + c], 5);
  EXPECT_EQ(wins[c * m + p], 7);
  EXPECT_EQ(wins[c * m + t], 9);
  EXPECT_EQ(wins[p * m + b], 6);
  EXPECT_EQ(wins[b * m + p], 8);
  EXPECT_EQ(wins[t * m + b], 11);
  EXPECT_EQ(wins[b * m + t], 3);
  EXPECT_EQ(wins[c * m + b], 10);
  EXPECT_EQ(wins[b * m + c], 4);
  const auto points = scores(instance.election, instance.rule);
  EXPECT_EQ(points[p], ScoreValue(5));
  EXPECT_EQ(points[t], ScoreValue(5));
  EXPECT_EQ(points[c], ScoreValue(7));
  for (const X3CInstance& x3c : {kYes, kNo}) {
    EXPECT_EQ(solve_shift_exact(gen_x3c_maximin_shift(x3c).instance).has_value(),
              x3c_check(x3c));
  }
}

TEST(SpavGenTest, ScoresAndPrices) {
  ReductionInstance out = gen_x3c_spav_mixed(kYes);
  const BriberyInstance& instance = out.instance;
  EXPECT_EQ(instance.kind(), BriberyKind::kMixed);
  EXPECT_EQ(instance.budget, 6);
  const auto points = scores(instance.election, instance.rule);
  EXPECT_EQ(points[0], ScoreValue(1));
  EXPECT_EQ(points[Named(instance, "e")], ScoreValue(3));
  EXPECT_EQ(points[Named(instance, "b1")], ScoreValue(2));
  EXPECT_EQ(instance.threshold_prices[0](3), Cost(3));
  EXPECT_EQ(instance.threshold_prices.back()(-1), Cost(1));
  EXPECT_TRUE(instance.threshold_prices[0](-1).forbidden());
}

TEST(SpavGenTest, CoverCostsFourPerSet) {
  // Each chosen set voter must reach past its pad and three ground members.
  for (const X3CInstance& x3c : {kYes, kNo}) {
    BriberyInstance instance = gen_x3c_spav_mixed(x3c).instance;
    instance.budget = 4 * x3c.k;
    EXPECT_EQ(solve_spav_mixed_exact(instance).has_value(), x3c_check(x3c));
    instance.budget = 4 * x3c.k - 1;
    EXPECT_FALSE(solve_spav_mixed_exact(instance).has_value());
  }
}

TEST(RandomSourcesTest, Deterministic) {
  EXPECT_EQ(random_x3c(2, 5, 42, true), random_x3c(2, 5, 42, true));
  EXPECT_EQ(random_bb(3, 2, 0.5, 42), random_bb(3, 2, 0.5, 42));
  X3CInstance x3c = random_x3c(2, 5, 42, true);
  EXPECT_EQ(x3c.sets.size(), 5u);
  EXPECT_NO_THROW(x3c.Validate());
}

}  // namespace
}  // namespace swapbribery
