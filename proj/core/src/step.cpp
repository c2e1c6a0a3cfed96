#include "repc/step.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace repc {

NetworkState async_step(const NetworkState& s, const Topology& g,
                        const RepcParams& p, const std::vector<int>& active,
                        const std::vector<std::uint8_t>* edge_alive,
                        StepLog* log, OpCounts* ops) {
  const int n = s.n();
  if (g.n() != n) throw std::invalid_argument("graph/state size mismatch");
  const std::size_t nn = static_cast<std::size_t>(n) * n;
  if (edge_alive && edge_alive->size() != nn)
    throw std::invalid_argument("edge mask size mismatch");

  NetworkState next = s;
  next.k = s.k + 1;
  if (log) {
    log->n = n;
    log->evaluated.assign(nn, 0);
    log->floored.assign(nn, 0);
  }

  std::vector<double> neighbor_x;
  std::vector<int> eff;
  std::vector<std::pair<double, double>> weighted;  // (state, weight)

  for (int i : active) {
    eff.clear();
    neighbor_x.clear();
    for (int j : g.in_neighbors(i)) {
      if (edge_alive && !(*edge_alive)[static_cast<std::size_t>(i) * n + j])
        continue;
      eff.push_back(j);
      neighbor_x.push_back(s.x[j]);
    }
    if (eff.empty()) continue;

    std::vector<double> raw =
        raw_reputation(neighbor_x, s.x[i], p.include_self_in_discrepancy, ops);
    std::vector<double> normalized = normalize_reputation(raw, p.f, ops);

    weighted.clear();
    for (std::size_t idx = 0; idx < eff.size(); ++idx) {
      bool floored = false;
      double conf = apply_confidence(normalized[idx], s.k, p.epsilon, &floored);
      const std::size_t at = static_cast<std::size_t>(i) * n + eff[idx];
      next.c[at] = conf;
      if (log) {
        log->evaluated[at] = 1;
        if (floored) log->floored[at] = 1;
      }
      double weight = p.fresh_reputation_in_update ? conf : s.c[at];
      weighted.emplace_back(s.x[eff[idx]], weight);
    }
    if (p.include_self_in_update) weighted.emplace_back(s.x[i], 1.0);

    // value-sorted accumulation keeps the result a function of the
    // (state, weight) multiset
    std::sort(weighted.begin(), weighted.end());
    double num = 0.0;
    double den = 0.0;
    for (const auto& [xv, w] : weighted) {
      num += w * xv;
      den += w;
    }
    next.x[i] = num / den;
    if (ops) ops->update += 3 * weighted.size() + 1;
  }
  return next;
}

NetworkState sync_step(const NetworkState& s, const Topology& g,
                       const RepcParams& p, StepLog* log, OpCounts* ops) {
  std::vector<int> all(s.n());
  std::iota(all.begin(), all.end(), 0);
  return async_step(s, g, p, all, nullptr, log, ops);
}

}  // namespace repc
