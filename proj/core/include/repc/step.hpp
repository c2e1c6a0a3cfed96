#pragma once

#include <cstdint>
#include <vector>

#include "repc/params.hpp"
#include "repc/reputation.hpp"
#include "repc/state.hpp"
#include "repc/topology.hpp"

namespace repc {

// Per-round evaluation record: which directed pairs (reader i, source j) were
// evaluated and which hit the confidence floor.
struct StepLog {
  int n = 0;
  std::vector<std::uint8_t> evaluated;  // n*n, [i*n + j]
  std::vector<std::uint8_t> floored;    // n*n

  bool evaluated_at(int i, int j) const {
    return evaluated[static_cast<std::size_t>(i) * n + j] != 0;
  }
  bool floored_at(int i, int j) const {
    return floored[static_cast<std::size_t>(i) * n + j] != 0;
  }
};

// One reputation-weighted averaging round restricted to `active` agents
// (ascending ids) and, when `edge_alive` is given, to directed edges whose
// n*n mask entry [reader*n + source] is nonzero. Inactive agents, and active
// agents whose effective proper neighborhood is empty, keep their state and
// confidence row. Confidence entries of unevaluated pairs are carried over.
NetworkState async_step(const NetworkState& s, const Topology& g,
                        const RepcParams& p, const std::vector<int>& active,
                        const std::vector<std::uint8_t>* edge_alive = nullptr,
                        StepLog* log = nullptr, OpCounts* ops = nullptr);

// Full-activity round. Defined as async_step with every agent active, so the
// two are identical bit for bit.
NetworkState sync_step(const NetworkState& s, const Topology& g,
                       const RepcParams& p, StepLog* log = nullptr,
                       OpCounts* ops = nullptr);

}  // namespace repc
