#pragma once

#include <cstdint>
#include <map>
#include <variant>
#include <vector>

#include "repc/state.hpp"

namespace repc {

// Attack strategies. All value parameters are expressed in the input domain
// of the initial states; the harness maps them through the run's
// normalization bijection before injection.
struct ConstantAttack {
  double value = 0.0;
};

// Geometric approach to `target` starting from the state the agent held when
// the attack first fired: value(k) = target + (anchor - target) * rate^(k -
// start_round + 1).
struct ConvergingAttack {
  double target = 0.0;
  double rate = 0.5;
};

// Independent draw per (run seed, agent, round); clamped to the normalized
// state interval [0, 1] unless `clamp` is cleared.
struct GaussianNoiseAttack {
  double mu = 0.0;
  double sigma = 1.0;
  bool clamp = true;
};

// Cyclic replay of a fixed value sequence.
struct ReplayAttack {
  std::vector<double> values;
};

using AttackStrategy = std::variant<ConstantAttack, ConvergingAttack,
                                    GaussianNoiseAttack, ReplayAttack>;

struct AttackSpec {
  std::vector<int> agents;  // ascending, deduplicated
  AttackStrategy strategy;
  int start_round = 1;  // first round whose broadcast is overridden
};

const char* strategy_name(const AttackStrategy& s);

// Applies all attacks for a given round. apply() is idempotent per round:
// noise draws are keyed by (seed, agent, round) and converging anchors are
// captured only once.
class Injector {
 public:
  Injector() = default;
  Injector(std::vector<AttackSpec> specs, const Bijection& bijection,
           std::uint64_t seed);

  // Overrides x[a] for every agent a under attack at round k.
  void apply(std::vector<double>& x, int k);

  const std::vector<int>& attacked() const { return attacked_; }
  bool empty() const { return specs_.empty(); }

 private:
  std::vector<AttackSpec> specs_;  // strategies in normalized units
  std::vector<int> attacked_;
  std::uint64_t seed_ = 0;
  std::map<int, double> anchors_;  // agent -> state at first injection
};

}  // namespace repc
