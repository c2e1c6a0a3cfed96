#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "repc/topology.hpp"

namespace repc {

// Round activity models. Draws are keyed by (run seed, round), so querying a
// round twice gives the same answer and rounds are independent.
struct FullScheduler {};

// Uniform subset size in [min_active, n], then a uniform subset of that size.
struct AsyncRandomSubset {
  int min_active = 1;
};

// Every agent active; each directed edge of the round's graph is kept
// independently with probability edge_prob.
struct StochasticEdges {
  double edge_prob = 1.0;
};

using SchedulerSpec =
    std::variant<FullScheduler, AsyncRandomSubset, StochasticEdges>;

const char* scheduler_name(const SchedulerSpec& s);

struct RoundActivity {
  std::vector<int> active;               // ascending
  std::vector<std::uint8_t> edge_alive;  // empty, or n*n mask [reader*n + src]
};

RoundActivity draw_activity(const SchedulerSpec& spec, const Topology& g,
                            std::uint64_t run_seed, int round);

}  // namespace repc
