#include "repc/config.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <string>
#include <vector>

namespace repc {
namespace {

bool mentions(const std::vector<std::string>& problems,
              const std::string& fragment) {
  return std::any_of(problems.begin(), problems.end(),
                     [&](const std::string& p) {
                       return p.find(fragment) != std::string::npos;
                     });
}

const char* kMinimal = R"({
  "schedule": {"n": 3, "edges": [[0,1],[1,0],[1,2],[2,1],[0,2],[2,0]]},
  "x0": [0.0, 0.5, 1.0],
  "seed": 7
})";

TEST(Config, MinimalConfigGetsDefaults) {
  SimConfig cfg = parse_config(kMinimal);
  EXPECT_EQ(cfg.schedule.n(), 3);
  EXPECT_TRUE(cfg.schedule.is_static());
  EXPECT_EQ(cfg.algorithm, Algorithm::kRepc);
  EXPECT_DOUBLE_EQ(cfg.params.epsilon, 0.1);
  EXPECT_EQ(cfg.params.f, 1);
  EXPECT_TRUE(cfg.params.include_self_in_discrepancy);
  EXPECT_FALSE(cfg.params.include_self_in_update);
  EXPECT_TRUE(cfg.params.fresh_reputation_in_update);
  EXPECT_DOUBLE_EQ(cfg.delta, 1e-9);
  EXPECT_EQ(cfg.round_cap, 0);
  EXPECT_EQ(cfg.seed, 7u);
  EXPECT_FALSE(cfg.seed_defaulted);
  EXPECT_TRUE(cfg.attacks.empty());
  EXPECT_TRUE(std::holds_alternative<FullScheduler>(cfg.scheduler));
  EXPECT_EQ(cfg.detect.window, 10);
  EXPECT_DOUBLE_EQ(cfg.detect.state_tol, 1e-6);
  EXPECT_TRUE(cfg.outputs.states_csv);
}

TEST(Config, MissingSeedIsDefaultedAndFlagged) {
  SimConfig cfg = parse_config(R"({
    "schedule": {"n": 2, "edges": [[0,1],[1,0]]},
    "x0": [0.0, 1.0]
  })");
  EXPECT_EQ(cfg.seed, 0u);
  EXPECT_TRUE(cfg.seed_defaulted);
}

TEST(Config, InvalidJsonIsASingleProblem) {
  try {
    parse_config("{not json");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    ASSERT_EQ(e.problems().size(), 1u);
    EXPECT_TRUE(mentions(e.problems(), "invalid JSON"));
  }
  EXPECT_THROW(parse_config("[1,2,3]"), ConfigError);
}

TEST(Config, CollectsEveryProblemInOnePass) {
  try {
    parse_config(R"({
      "schedule": {"n": 3, "edges": [[0,1],[1,0],[1,2],[2,1],[0,2],[2,0]]},
      "x0": [0.0, 0.5],
      "algorithm": "quantum",
      "params": {"epsilon": 2.0, "f": 0, "bogus": 1},
      "delta": -1.0,
      "round_cap": -3,
      "seed": -4,
      "detect": {"window": 0},
      "mystery": true
    })");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const auto& p = e.problems();
    EXPECT_GE(p.size(), 8u);
    EXPECT_TRUE(mentions(p, "does not match n=3"));
    EXPECT_TRUE(mentions(p, "unknown value \"quantum\""));
    EXPECT_TRUE(mentions(p, "epsilon must be in (0, 1)"));
    EXPECT_TRUE(mentions(p, "f must be >= 1"));
    EXPECT_TRUE(mentions(p, "unknown key \"bogus\""));
    EXPECT_TRUE(mentions(p, "delta: must be > 0"));
    EXPECT_TRUE(mentions(p, "round_cap: must be >= 0"));
    EXPECT_TRUE(mentions(p, "seed: must be a non-negative integer"));
    EXPECT_TRUE(mentions(p, "window must be >= 1"));
    EXPECT_TRUE(mentions(p, "unknown key \"mystery\""));
  }
}

TEST(Config, UnknownKeysAreRejectedAtEveryLevel) {
  try {
    parse_config(R"({
      "schedule": {"n": 2, "edges": [[0,1],[1,0]], "color": "red"},
      "x0": [0.0, 1.0],
      "seed": 1,
      "scheduler": {"type": "full", "speed": 3},
      "outputs": {"dir": "x", "format": "png"},
      "attack": {"agents": [0], "strategy": "constant", "value": 1.0,
                 "oops": true}
    })");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    const auto& p = e.problems();
    EXPECT_TRUE(mentions(p, "unknown key \"color\""));
    EXPECT_TRUE(mentions(p, "unknown key \"speed\""));
    EXPECT_TRUE(mentions(p, "unknown key \"format\""));
    EXPECT_TRUE(mentions(p, "unknown key \"oops\""));
  }
}

TEST(Config, AttackAndAttacksAreMutuallyExclusive) {
  try {
    parse_config(R"({
      "schedule": {"n": 2, "edges": [[0,1],[1,0]]},
      "x0": [0.0, 1.0],
      "seed": 1,
      "attack": {"agents": [0], "strategy": "constant", "value": 1.0},
      "attacks": [{"agents": [1], "strategy": "constant", "value": 2.0}]
    })");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_TRUE(mentions(e.problems(), "either \"attack\" or \"attacks\""));
  }
}

TEST(Config, AttackAgentSetsMustBeDisjoint) {
  try {
    parse_config(R"({
      "schedule": {"n": 3, "edges": [[0,1],[1,0],[1,2],[2,1],[0,2],[2,0]]},
      "x0": [0.0, 0.5, 1.0],
      "seed": 1,
      "attacks": [
        {"agents": [0, 1], "strategy": "constant", "value": 1.0},
        {"agents": [1], "strategy": "replay", "values": [0.5]}
      ]
    })");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_TRUE(mentions(e.problems(), "agent 1 appears in more than one"));
  }
}

TEST(Config, AttackValidation) {
  auto bad = [](const char* attack_body) {
    std::string text = std::string(R"({
      "schedule": {"n": 3, "edges": [[0,1],[1,0],[1,2],[2,1],[0,2],[2,0]]},
      "x0": [0.0, 0.5, 1.0],
      "seed": 1,
      "attack": )") + attack_body + "}";
    return text;
  };
  EXPECT_THROW(parse_config(bad(R"({"agents": [], "strategy": "constant",
                                    "value": 1.0})")),
               ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"agents": [5], "strategy": "constant",
                                    "value": 1.0})")),
               ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"agents": [0], "strategy": "constant"})")),
               ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"agents": [0], "strategy": "warp"})")),
               ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"agents": [0], "strategy": "converging",
                                    "target": 1.0, "rate": 1.5})")),
               ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"agents": [0], "strategy": "replay",
                                    "values": []})")),
               ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"agents": [0], "strategy": "gaussian_noise",
                                    "sigma": -0.5})")),
               ConfigError);
  EXPECT_THROW(parse_config(bad(R"({"agents": [0], "strategy": "constant",
                                    "value": 1.0, "start_round": 0})")),
               ConfigError);
}

TEST(Config, TrimmedBaselineRequiresFullScheduler) {
  try {
    parse_config(R"({
      "schedule": {"n": 4, "edges": [[0,1],[1,0],[1,2],[2,1],[2,3],[3,2],
                                     [3,0],[0,3]]},
      "x0": [0.0, 0.3, 0.6, 1.0],
      "seed": 1,
      "algorithm": "trimmed",
      "scheduler": {"type": "async_random_subset", "min_active": 2}
    })");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_TRUE(mentions(e.problems(), "trimmed baseline only supports"));
  }
}

TEST(Config, SchedulerVariantsParse) {
  SimConfig a = parse_config(R"({
    "schedule": {"n": 2, "edges": [[0,1],[1,0]]},
    "x0": [0.0, 1.0],
    "seed": 1,
    "scheduler": {"type": "async_random_subset", "min_active": 2}
  })");
  ASSERT_TRUE(std::holds_alternative<AsyncRandomSubset>(a.scheduler));
  EXPECT_EQ(std::get<AsyncRandomSubset>(a.scheduler).min_active, 2);

  SimConfig b = parse_config(R"({
    "schedule": {"n": 2, "edges": [[0,1],[1,0]]},
    "x0": [0.0, 1.0],
    "seed": 1,
    "scheduler": {"type": "stochastic_edges", "edge_prob": 0.25}
  })");
  ASSERT_TRUE(std::holds_alternative<StochasticEdges>(b.scheduler));
  EXPECT_DOUBLE_EQ(std::get<StochasticEdges>(b.scheduler).edge_prob, 0.25);

  EXPECT_THROW(parse_config(R"({
    "schedule": {"n": 2, "edges": [[0,1],[1,0]]},
    "x0": [0.0, 1.0],
    "seed": 1,
    "scheduler": {"type": "async_random_subset", "min_active": 9}
  })"),
               ConfigError);
}

TEST(Config, PiecewiseScheduleParsesAndValidates) {
  SimConfig cfg = parse_config(R"({
    "schedule": {"pieces": [
      {"from": 0, "graph": {"n": 2, "edges": [[0,1],[1,0]]}},
      {"from": 5, "graph": {"n": 2, "edges": [[1,0],[0,1]]}}
    ]},
    "x0": [0.0, 1.0],
    "seed": 1
  })");
  EXPECT_FALSE(cfg.schedule.is_static());
  EXPECT_EQ(cfg.schedule.pieces().size(), 2u);

  EXPECT_THROW(parse_config(R"({
    "schedule": {"pieces": [
      {"from": 3, "graph": {"n": 2, "edges": [[0,1],[1,0]]}}
    ]},
    "x0": [0.0, 1.0],
    "seed": 1
  })"),
               ConfigError);
}

TEST(Config, LoadConfigReportsUnreadablePath) {
  try {
    load_config("/nonexistent/path/config.json");
    FAIL() << "expected ConfigError";
  } catch (const ConfigError& e) {
    EXPECT_TRUE(mentions(e.problems(), "cannot open"));
  }
}

TEST(Config, AttackedAgentsIsSortedUnion) {
  SimConfig cfg = parse_config(R"({
    "schedule": {"n": 4, "edges": [[0,1],[1,0],[1,2],[2,1],[2,3],[3,2],
                                   [3,0],[0,3]]},
    "x0": [0.0, 0.3, 0.6, 1.0],
    "seed": 1,
    "attacks": [
      {"agents": [3], "strategy": "constant", "value": 1.0},
      {"agents": [1], "strategy": "replay", "values": [0.5, 0.7]}
    ]
  })");
  EXPECT_EQ(cfg.attacked_agents(), (std::vector<int>{1, 3}));
}

TEST(Config, RoundTripsThroughJson) {
  SimConfig cfg;
  std::vector<TopologySchedule::Piece> pieces;
  pieces.push_back({0, Topology::ring(4)});
  pieces.push_back({6, Topology::complete(4)});
  cfg.schedule = TopologySchedule(std::move(pieces));
  cfg.x0 = {0.25, -1.5, 3.75, 2.0};
  cfg.params.epsilon = 0.2;
  cfg.params.f = 2;
  cfg.params.include_self_in_update = true;
  cfg.attacks = {AttackSpec{{1}, ConvergingAttack{2.5, 0.75}, 4},
                 AttackSpec{{2}, GaussianNoiseAttack{1.0, 0.3, false}, 2}};
  cfg.scheduler = StochasticEdges{0.8};
  cfg.delta = 1e-7;
  cfg.round_cap = 123;
  cfg.seed = 99;
  cfg.detect.window = 6;
  cfg.detect.state_tol = 1e-5;
  cfg.outputs.dir = "somewhere";
  cfg.outputs.plot_svg = false;

  SimConfig back = parse_config(config_to_json(cfg));
  EXPECT_EQ(back.schedule.pieces().size(), 2u);
  EXPECT_EQ(back.schedule.pieces()[1].from, 6);
  EXPECT_EQ(back.schedule.at(7).edges(), Topology::complete(4).edges());
  EXPECT_EQ(back.x0, cfg.x0);
  EXPECT_DOUBLE_EQ(back.params.epsilon, 0.2);
  EXPECT_EQ(back.params.f, 2);
  EXPECT_TRUE(back.params.include_self_in_update);
  ASSERT_EQ(back.attacks.size(), 2u);
  EXPECT_EQ(back.attacks[0].agents, std::vector<int>{1});
  EXPECT_EQ(back.attacks[0].start_round, 4);
  const auto* conv = std::get_if<ConvergingAttack>(&back.attacks[0].strategy);
  ASSERT_NE(conv, nullptr);
  EXPECT_DOUBLE_EQ(conv->target, 2.5);
  EXPECT_DOUBLE_EQ(conv->rate, 0.75);
  const auto* gsn = std::get_if<GaussianNoiseAttack>(&back.attacks[1].strategy);
  ASSERT_NE(gsn, nullptr);
  EXPECT_DOUBLE_EQ(gsn->mu, 1.0);
  EXPECT_DOUBLE_EQ(gsn->sigma, 0.3);
  EXPECT_FALSE(gsn->clamp);
  const auto* st = std::get_if<StochasticEdges>(&back.scheduler);
  ASSERT_NE(st, nullptr);
  EXPECT_DOUBLE_EQ(st->edge_prob, 0.8);
  EXPECT_DOUBLE_EQ(back.delta, 1e-7);
  EXPECT_EQ(back.round_cap, 123);
  EXPECT_EQ(back.seed, 99u);
  EXPECT_FALSE(back.seed_defaulted);
  EXPECT_EQ(back.detect.window, 6);
  EXPECT_DOUBLE_EQ(back.detect.state_tol, 1e-5);
  EXPECT_EQ(back.outputs.dir, "somewhere");
  EXPECT_FALSE(back.outputs.plot_svg);
  EXPECT_TRUE(back.outputs.states_csv);
}

}  // namespace
}  // namespace repc
