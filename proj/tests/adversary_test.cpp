#include "repc/adversary.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

namespace repc {
namespace {

Bijection identity_bijection() { return Bijection{0.0, 1.0}; }

TEST(Adversary, StrategyNames) {
  EXPECT_STREQ(strategy_name(ConstantAttack{}), "constant");
  EXPECT_STREQ(strategy_name(ConvergingAttack{}), "converging");
  EXPECT_STREQ(strategy_name(GaussianNoiseAttack{}), "gaussian_noise");
  EXPECT_STREQ(strategy_name(ReplayAttack{}), "replay");
}

TEST(Adversary, ConstantOverridesFromStartRoundOn) {
  AttackSpec spec{{1}, ConstantAttack{0.8}, 2};
  Injector inj({spec}, identity_bijection(), 9);
  std::vector<double> x = {0.1, 0.2, 0.3};
  inj.apply(x, 0);
  inj.apply(x, 1);
  EXPECT_DOUBLE_EQ(x[1], 0.2);
  inj.apply(x, 2);
  EXPECT_DOUBLE_EQ(x[1], 0.8);
  EXPECT_DOUBLE_EQ(x[0], 0.1);
  EXPECT_DOUBLE_EQ(x[2], 0.3);
}

TEST(Adversary, ValuesMapThroughBijection) {
  // raw domain [2, 6] -> offset 2, scale 4; raw 4 is normalized 0.5
  Bijection b{2.0, 4.0};
  Injector inj({AttackSpec{{0}, ConstantAttack{4.0}, 1}}, b, 9);
  std::vector<double> x = {0.0};
  inj.apply(x, 1);
  EXPECT_DOUBLE_EQ(x[0], 0.5);
}

TEST(Adversary, GaussianIsIdempotentPerRoundAndSeedKeyed) {
  AttackSpec spec{{0}, GaussianNoiseAttack{0.5, 0.2, false}, 1};
  Injector a({spec}, identity_bijection(), 42);
  Injector b({spec}, identity_bijection(), 42);
  Injector c({spec}, identity_bijection(), 43);

  std::vector<double> xa = {0.0}, xb = {0.0}, xc = {0.0};
  a.apply(xa, 3);
  b.apply(xb, 3);
  c.apply(xc, 3);
  EXPECT_EQ(xa[0], xb[0]);
  EXPECT_NE(xa[0], xc[0]);

  // replaying the same round gives the same draw even after other rounds
  std::vector<double> xa2 = {0.0};
  a.apply(xa2, 7);
  a.apply(xa2, 3);
  EXPECT_EQ(xa2[0], xa[0]);

  // distinct rounds and distinct agents give distinct draws
  AttackSpec wide{{0, 1}, GaussianNoiseAttack{0.5, 0.2, false}, 1};
  Injector d({wide}, identity_bijection(), 42);
  std::vector<double> xd = {0.0, 0.0};
  d.apply(xd, 3);
  EXPECT_NE(xd[0], xd[1]);
  std::vector<double> xd4 = {0.0, 0.0};
  d.apply(xd4, 4);
  EXPECT_NE(xd4[0], xd[0]);
}

TEST(Adversary, GaussianClampKeepsNormalizedRange) {
  AttackSpec spec{{0}, GaussianNoiseAttack{3.0, 2.0, true}, 1};
  Injector inj({spec}, identity_bijection(), 5);
  for (int k = 1; k <= 200; ++k) {
    std::vector<double> x = {0.5};
    inj.apply(x, k);
    EXPECT_GE(x[0], 0.0);
    EXPECT_LE(x[0], 1.0);
  }
}

TEST(Adversary, ConvergingAnchorsAtFirstInjection) {
  AttackSpec spec{{0}, ConvergingAttack{1.0, 0.5}, 3};
  Injector inj({spec}, identity_bijection(), 1);
  std::vector<double> x = {0.2};
  inj.apply(x, 1);
  inj.apply(x, 2);
  EXPECT_DOUBLE_EQ(x[0], 0.2);
  inj.apply(x, 3);  // anchor = 0.2, value = 1 + (0.2 - 1) * 0.5 = 0.6
  EXPECT_DOUBLE_EQ(x[0], 0.6);
  inj.apply(x, 4);  // 1 + (0.2 - 1) * 0.25 = 0.8
  EXPECT_DOUBLE_EQ(x[0], 0.8);
  // re-applying an earlier round does not move the anchor
  std::vector<double> y = {0.99};
  inj.apply(y, 3);
  EXPECT_DOUBLE_EQ(y[0], 0.6);
}

TEST(Adversary, ReplayCyclesThroughSequence) {
  AttackSpec spec{{0}, ReplayAttack{{0.1, 0.2, 0.3}}, 2};
  Injector inj({spec}, identity_bijection(), 1);
  std::vector<double> expect_by_round = {0.1, 0.2, 0.3, 0.1, 0.2};
  for (int k = 2; k < 7; ++k) {
    std::vector<double> x = {0.0};
    inj.apply(x, k);
    EXPECT_DOUBLE_EQ(x[0], expect_by_round[k - 2]) << "round " << k;
  }
}

TEST(Adversary, AttackedListIsSortedUnionOfSpecs) {
  std::vector<AttackSpec> specs = {
      AttackSpec{{4, 1}, ConstantAttack{0.5}, 1},
      AttackSpec{{2}, ConstantAttack{0.7}, 1},
  };
  Injector inj(specs, identity_bijection(), 1);
  EXPECT_EQ(inj.attacked(), (std::vector<int>{1, 2, 4}));
  EXPECT_FALSE(inj.empty());
  EXPECT_TRUE(Injector().empty());
}

}  // namespace
}  // namespace repc
