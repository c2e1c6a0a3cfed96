#include "repc/presets.hpp"

#include <algorithm>
#include <stdexcept>

#include "repc/rng.hpp"

namespace repc {
namespace {

const std::vector<double> kX0Five = {1.0, 0.0, 3.0, 1.2, 2.5};

SimConfig base_five() {
  SimConfig cfg;
  cfg.schedule = TopologySchedule(Topology::complete(5));
  cfg.x0 = kX0Five;
  return cfg;
}

AttackSpec constant_on(int agent, double value, int start_round = 1) {
  AttackSpec a;
  a.agents = {agent};
  a.strategy = ConstantAttack{value};
  a.start_round = start_round;
  return a;
}

std::vector<double> uniform_x0(int n, double lo, double hi,
                               std::uint64_t seed) {
  auto eng = make_engine(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> x(n);
  for (double& v : x) v = dist(eng);
  return x;
}

Preset build(const std::string& name, bool desk_scale) {
  Preset p;
  p.name = name;

  if (name == "no_attack") {
    p.description = "5 agents, complete graph, clean averaging to consensus";
    p.config = base_five();
    p.config.seed = 1;
    return p;
  }
  if (name == "near_consensus_attacker") {
    p.description =
        "complete 5-agent graph with one constant attacker parked near the "
        "honest consensus";
    p.config = base_five();
    p.config.attacks = {constant_on(0, 1.6)};
    p.config.seed = 2;
    p.compute_reference = true;
    return p;
  }
  if (name == "two_attackers_same_side" ||
      name == "two_attackers_opposite") {
    bool same = name == "two_attackers_same_side";
    p.description =
        same ? "13-agent random graph, two constant attackers above the pack"
             : "13-agent random graph, constant attackers on both flanks";
    SimConfig cfg;
    cfg.schedule =
        TopologySchedule(Topology::random_strongly_connected(13, 0.6, 7));
    cfg.x0 = uniform_x0(13, 0.0, 3.0, 99);
    // two compromised agents can share a neighborhood, so the scheme must
    // discount up to two outliers per agent
    cfg.params.f = 2;
    if (same) {
      cfg.attacks = {constant_on(0, 3.5), constant_on(1, 3.8)};
      cfg.seed = 3;
    } else {
      cfg.attacks = {constant_on(0, -0.5), constant_on(1, 3.5)};
      cfg.seed = 5;
    }
    p.config = cfg;
    p.compute_reference = true;
    return p;
  }
  if (name == "async") {
    p.description =
        "constant attacker on the complete 5-agent graph with only a random "
        "subset of agents updating each round";
    p.config = base_five();
    p.config.attacks = {constant_on(0, 1.6)};
    p.config.scheduler = AsyncRandomSubset{4};
    p.config.seed = 11;
    p.compute_reference = true;
    return p;
  }
  if (name == "dynamic" || name == "dynamic_noisy") {
    bool noisy = name == "dynamic_noisy";
    p.description = noisy
                        ? "switching topology with a Gaussian-noise attacker"
                        : "consensus across a switching topology";
    Topology g1 = Topology::random_strongly_connected(8, 0.5, 41);
    Topology g2 = Topology::random_strongly_connected(8, 0.5, 43);
    std::vector<TopologySchedule::Piece> pieces = {
        {0, g1}, {5, g2}, {10, g1}, {15, g2}, {20, g1}};
    SimConfig cfg;
    cfg.schedule = TopologySchedule(std::move(pieces));
    cfg.x0 = uniform_x0(8, 0.0, 3.0, 101);
    if (noisy) {
      AttackSpec a;
      a.agents = {0};
      a.strategy = GaussianNoiseAttack{1.5, 0.3, true};
      cfg.attacks = {a};
      cfg.seed = 17;
      p.compute_reference = true;
    } else {
      cfg.seed = 13;
    }
    p.config = cfg;
    return p;
  }
  if (name == "stochastic") {
    p.description =
        "constant attacker on the complete 5-agent graph with lossy links";
    p.config = base_five();
    p.config.attacks = {constant_on(0, 1.6)};
    p.config.scheduler = StochasticEdges{0.9};
    p.config.seed = 19;
    p.compute_reference = true;
    return p;
  }
  if (name == "vs_baseline_k4") {
    p.description =
        "complete 4-agent graph where trimmed-mean averaging is captured by "
        "a stubborn attacker and the reputation update is not";
    SimConfig cfg;
    cfg.schedule = TopologySchedule(Topology::complete(4));
    cfg.x0 = {0.0, 0.1, 1.0, 0.6};
    cfg.attacks = {constant_on(3, 0.6)};
    cfg.seed = 23;
    p.config = cfg;
    p.baseline_config = cfg;
    p.baseline_config->algorithm = Algorithm::kTrimmed;
    p.compute_reference = true;
    return p;
  }
  if (name == "vs_baseline_stubborn") {
    p.description =
        "7-agent random graph with a stubborn agent repeating its initial "
        "opinion; reputation update vs trimmed-mean baseline";
    SimConfig cfg;
    cfg.schedule =
        TopologySchedule(Topology::random_strongly_connected(7, 0.7, 53));
    cfg.x0 = uniform_x0(7, 0.0, 1.0, 103);
    // the stubborn agent holds an off-center but interior opinion: far
    // enough from the honest consensus to matter, yet never trimmed away
    std::vector<double> sorted = cfg.x0;
    std::sort(sorted.begin(), sorted.end());
    double value = sorted[1];
    int stubborn = 0;
    for (std::size_t i = 0; i < cfg.x0.size(); ++i)
      if (cfg.x0[i] == value) stubborn = static_cast<int>(i);
    cfg.attacks = {constant_on(stubborn, value)};
    cfg.seed = 29;
    p.config = cfg;
    p.baseline_config = cfg;
    p.baseline_config->algorithm = Algorithm::kTrimmed;
    p.compute_reference = true;
    return p;
  }
  if (name == "error_sweep") {
    p.description =
        "mean consensus error versus Gaussian attacker parameters on the "
        "complete 5-agent graph";
    p.config = base_five();
    p.config.seed = 31;
    SweepGrid grid;
    grid.mus = {0.0, 0.25, 0.5, 0.75, 1.0};
    grid.sigmas = {0.1, 0.5, 1.0};
    grid.repeats = desk_scale ? 5 : 20;
    grid.agents = {0};
    p.sweep_grid = grid;
    return p;
  }
  throw std::invalid_argument("unknown preset \"" + name + "\"");
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"no_attack",
          "near_consensus_attacker",
          "two_attackers_same_side",
          "two_attackers_opposite",
          "async",
          "dynamic",
          "dynamic_noisy",
          "stochastic",
          "vs_baseline_k4",
          "vs_baseline_stubborn",
          "error_sweep"};
}

Preset make_preset(const std::string& name, std::optional<std::uint64_t> seed,
                   bool desk_scale) {
  Preset p = build(name, desk_scale);
  if (seed) {
    p.config.seed = *seed;
    if (p.baseline_config) p.baseline_config->seed = *seed;
  }
  return p;
}

}  // namespace repc
