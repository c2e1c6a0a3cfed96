#include "repc/harness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "repc/rng.hpp"
#include "repc/scheduler.hpp"
#include "repc/trimmed.hpp"

namespace repc {

double contraction_rate(int min_inclusive_neighborhood) {
  return 3.0 / (min_inclusive_neighborhood + 1.0);
}

int round_bound(double lambda, double delta) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw std::invalid_argument("round_bound needs lambda in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0))
    throw std::invalid_argument("round_bound needs delta in (0, 1)");
  return static_cast<int>(std::ceil(std::log(delta) / std::log(lambda)));
}

std::vector<int> RunResult::regular_agents() const {
  std::vector<int> out;
  for (int i = 0; i < n(); ++i)
    if (!std::binary_search(attacked.begin(), attacked.end(), i))
      out.push_back(i);
  return out;
}

namespace {

AssumptionReport combined_assumptions(const TopologySchedule& schedule,
                                      const std::vector<int>& attacked) {
  AssumptionReport combined;
  bool first = true;
  for (const auto& piece : schedule.pieces()) {
    AssumptionReport r = validate_assumptions(piece.graph, attacked);
    if (first) {
      combined = r;
      first = false;
      continue;
    }
    combined.min_neighborhood_size =
        std::min(combined.min_neighborhood_size, r.min_neighborhood_size);
    combined.min_proper_neighborhood_size =
        std::min(combined.min_proper_neighborhood_size,
                 r.min_proper_neighborhood_size);
    combined.majority_ok = combined.majority_ok && r.majority_ok;
    combined.regular_subgraph_connected =
        combined.regular_subgraph_connected && r.regular_subgraph_connected;
  }
  combined.rate_bound_applicable = combined.min_neighborhood_size > 3;
  return combined;
}

}  // namespace

RunResult run(const SimConfig& cfg) {
  const int n = cfg.schedule.n();
  if (n < 1) throw std::invalid_argument("run: empty schedule");
  if (static_cast<int>(cfg.x0.size()) != n)
    throw std::invalid_argument("run: x0 size does not match the graph");
  if (!(cfg.delta > 0.0)) throw std::invalid_argument("run: delta must be > 0");

  RunResult r;
  r.bijection = make_bijection(cfg.x0);
  r.seed_defaulted = cfg.seed_defaulted;

  std::vector<double> x0n(cfg.x0.size());
  for (std::size_t i = 0; i < cfg.x0.size(); ++i)
    x0n[i] = r.bijection.to_normalized(cfg.x0[i]);
  NetworkState state = NetworkState::initial(x0n);

  Injector injector(cfg.attacks, r.bijection, cfg.seed);
  r.attacked = injector.attacked();
  for (int a : r.attacked)
    if (a < 0 || a >= n)
      throw std::invalid_argument("run: attacked agent out of range");
  r.assumptions = combined_assumptions(cfg.schedule, r.attacked);

  const bool repc_algo = cfg.algorithm == Algorithm::kRepc;
  if (repc_algo && cfg.schedule.is_static() &&
      r.assumptions.rate_bound_applicable) {
    r.bound = round_bound(contraction_rate(r.assumptions.min_neighborhood_size),
                          cfg.delta);
  }
  const int default_cap = r.bound > 0 ? 10 * r.bound : 5000;
  const int cap =
      std::max(r.bound, cfg.round_cap > 0 ? cfg.round_cap : default_cap);

  std::vector<int> regulars;
  for (int i = 0; i < n; ++i)
    if (!std::binary_search(r.attacked.begin(), r.attacked.end(), i))
      regulars.push_back(i);

  std::vector<std::uint8_t> held;
  for (int k = 0; k < cap; ++k) {
    injector.apply(state.x, k);
    r.trace.push_back(state.x);

    const Topology& g = cfg.schedule.at(k);
    NetworkState next;
    if (repc_algo) {
      RoundActivity act = draw_activity(cfg.scheduler, g, cfg.seed, k);
      StepLog log;
      next = async_step(state, g, cfg.params, act.active,
                        act.edge_alive.empty() ? nullptr : &act.edge_alive,
                        &log, &r.ops);
      r.logs.push_back(std::move(log));
      r.reputation_trace.push_back(next.c);
    } else {
      next = trimmed_step(state, g, cfg.trimmed, &held);
      for (std::uint8_t h : held) r.trim_holds += h;
    }

    double dk = 0.0;
    for (int i : regulars) dk = std::max(dk, std::abs(next.x[i] - state.x[i]));
    r.deltas.push_back(dk);
    state = std::move(next);
    r.rounds = k + 1;
    if (dk < cfg.delta) {
      r.converged = true;
      break;
    }
  }

  r.final_x = state.x;
  // a compromised agent's averaging output is never broadcast; report what
  // its neighbors last saw
  for (int a : r.attacked) r.final_x[a] = r.trace.back()[a];
  r.final_x_denormalized.resize(r.final_x.size());
  for (std::size_t i = 0; i < r.final_x.size(); ++i)
    r.final_x_denormalized[i] = r.bijection.to_raw(r.final_x[i]);
  return r;
}

Metrics compute_metrics(const RunResult& r, std::optional<double> reference) {
  Metrics m;
  m.rounds = r.rounds;
  m.converged = r.converged;
  std::vector<int> regulars = r.regular_agents();
  if (regulars.empty()) return m;
  double sum = 0.0;
  double lo = r.final_x_denormalized[regulars[0]];
  double hi = lo;
  for (int i : regulars) {
    double v = r.final_x_denormalized[i];
    sum += v;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  m.consensus_estimate = sum / static_cast<double>(regulars.size());
  m.max_spread = hi - lo;
  if (reference) m.error_vs_reference = std::abs(m.consensus_estimate - *reference);
  return m;
}

std::vector<int> DetectionReport::suspects() const {
  std::vector<int> out;
  for (const auto& [_, j] : flags) out.push_back(j);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DetectionReport detect_attacked(const RunResult& r, const DetectParams& p) {
  if (r.logs.empty())
    throw std::invalid_argument(
        "detect_attacked needs a reputation-algorithm run");
  const int n = r.n();
  DetectionReport report;
  if (r.rounds < p.window) report.low_confidence = true;

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      int seen = 0;
      bool all_floored = true;
      for (int k = r.rounds - 1; k >= 0 && seen < p.window; --k) {
        if (!r.logs[k].evaluated_at(i, j)) continue;
        ++seen;
        if (!r.logs[k].floored_at(i, j)) {
          all_floored = false;
          break;
        }
      }
      if (seen == 0 || !all_floored) continue;
      if (std::abs(r.final_x[j] - r.final_x[i]) <= p.state_tol) continue;
      report.flags.emplace_back(i, j);
      if (seen < p.window) report.low_confidence = true;
    }
  }
  return report;
}

SweepResult sweep(const SimConfig& base, const SweepGrid& grid) {
  if (grid.mus.empty() || grid.sigmas.empty() || grid.repeats < 1)
    throw std::invalid_argument("sweep: empty grid");

  SimConfig clean = base;
  clean.attacks.clear();
  SweepResult out;
  out.reference = compute_metrics(run(clean)).consensus_estimate;

  std::uint64_t cell_index = 0;
  for (double mu : grid.mus) {
    for (double sigma : grid.sigmas) {
      SweepCell cell;
      cell.mu = mu;
      cell.sigma = sigma;
      cell.repeats = grid.repeats;
      std::vector<double> errors;
      for (int rep = 0; rep < grid.repeats; ++rep) {
        SimConfig cfg = base;
        AttackSpec attack;
        attack.agents = grid.agents;
        attack.start_round = grid.start_round;
        attack.strategy = GaussianNoiseAttack{mu, sigma, true};
        cfg.attacks = {attack};
        cfg.seed = derive_seed(base.seed, kStreamSweep, cell_index,
                               static_cast<std::uint64_t>(rep));
        Metrics m = compute_metrics(run(cfg), out.reference);
        errors.push_back(*m.error_vs_reference);
      }
      double mean = 0.0;
      for (double e : errors) mean += e;
      mean /= static_cast<double>(errors.size());
      double var = 0.0;
      for (double e : errors) var += (e - mean) * (e - mean);
      var = errors.size() > 1 ? var / static_cast<double>(errors.size() - 1)
                              : 0.0;
      cell.mean_abs_error = mean;
      cell.std_error = std::sqrt(var / static_cast<double>(errors.size()));
      out.cells.push_back(cell);
      ++cell_index;
    }
  }
  return out;
}

}  // namespace repc
