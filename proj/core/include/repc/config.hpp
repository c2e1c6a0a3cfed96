#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "repc/adversary.hpp"
#include "repc/params.hpp"
#include "repc/scheduler.hpp"
#include "repc/topology.hpp"

namespace repc {

struct OutputSpec {
  std::string dir;  // empty: resolved by the CLI (REPC_OUT or ./repc_out)
  bool states_csv = true;
  bool reputations_csv = true;
  bool plot_svg = true;
  bool summary_json = true;
};

struct SimConfig {
  TopologySchedule schedule;
  std::vector<double> x0;  // input domain
  Algorithm algorithm = Algorithm::kRepc;
  RepcParams params;
  TrimmedParams trimmed;
  std::vector<AttackSpec> attacks;
  SchedulerSpec scheduler;  // FullScheduler by default
  double delta = 1e-9;
  int round_cap = 0;  // 0: derived default
  std::uint64_t seed = 0;
  bool seed_defaulted = false;  // config omitted the seed
  DetectParams detect;
  OutputSpec outputs;

  std::vector<int> attacked_agents() const;  // union, ascending
};

// Carries every problem found, not just the first.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

// Parses and validates a simulation config. Unknown keys anywhere in the
// document are errors. A missing seed defaults to 0 and is flagged via
// seed_defaulted so reports can say so.
SimConfig parse_config(const std::string& json_text);
SimConfig load_config(const std::string& path);

std::string config_to_json(const SimConfig& cfg);

}  // namespace repc
