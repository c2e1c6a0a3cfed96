#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "repc/config.hpp"
#include "repc/state.hpp"
#include "repc/step.hpp"

namespace repc {

// Contraction rate 3/(N+1) for minimum inclusive neighborhood size N; only
// meaningful for N > 3.
double contraction_rate(int min_inclusive_neighborhood);
// ceil(log(delta) / log(lambda)) for lambda in (0,1), delta in (0,1).
int round_bound(double lambda, double delta);

struct RunResult {
  int rounds = 0;        // executed rounds
  bool converged = false;
  int bound = 0;         // round bound when applicable, else 0
  Bijection bijection;
  std::vector<int> attacked;  // ascending
  bool seed_defaulted = false;

  // trace[k]: states broadcast in round k (normalized, post-injection),
  // k = 0..rounds-1.
  std::vector<std::vector<double>> trace;
  // reputation_trace[k]: confidence matrix produced by round k (n*n).
  // Empty for the trimmed baseline.
  std::vector<std::vector<double>> reputation_trace;
  std::vector<StepLog> logs;   // per round; empty for the trimmed baseline
  std::vector<double> deltas;  // max |x_(k+1) - x_k| over regular agents

  // Post-run states; compromised agents hold the value they last broadcast
  // rather than the averaging output nobody ever saw.
  std::vector<double> final_x;  // normalized
  std::vector<double> final_x_denormalized;

  AssumptionReport assumptions;
  std::uint64_t trim_holds = 0;
  OpCounts ops;

  int n() const { return static_cast<int>(final_x.size()); }
  std::vector<int> regular_agents() const;
};

RunResult run(const SimConfig& cfg);

struct Metrics {
  double consensus_estimate = 0.0;  // mean of regular finals, input domain
  double max_spread = 0.0;          // over regular finals, input domain
  int rounds = 0;
  bool converged = false;
  std::optional<double> error_vs_reference;
};

Metrics compute_metrics(const RunResult& r,
                        std::optional<double> reference = std::nullopt);

struct DetectionReport {
  std::vector<std::pair<int, int>> flags;  // (observer, suspect)
  bool low_confidence = false;  // some pair had fewer evaluations than the
                                // window; its available suffix was used
  std::vector<int> suspects() const;  // deduplicated, ascending
};

// Floor-streak detector over the run's evaluation logs. Requires a
// reputation-algorithm result (throws std::invalid_argument otherwise).
DetectionReport detect_attacked(const RunResult& r, const DetectParams& p);

struct SweepGrid {
  std::vector<double> mus;     // input domain
  std::vector<double> sigmas;  // input domain
  int repeats = 20;
  std::vector<int> agents = {0};
  int start_round = 1;
};

struct SweepCell {
  double mu = 0.0;
  double sigma = 0.0;
  double mean_abs_error = 0.0;  // vs the unattacked consensus, input domain
  double std_error = 0.0;       // standard error of the mean
  int repeats = 0;
};

struct SweepResult {
  double reference = 0.0;  // unattacked consensus estimate
  std::vector<SweepCell> cells;
};

// Replaces the base config's attacks with Gaussian noise on grid.agents and
// measures each cell over `repeats` runs with derived per-repeat seeds.
SweepResult sweep(const SimConfig& base, const SweepGrid& grid);

}  // namespace repc
