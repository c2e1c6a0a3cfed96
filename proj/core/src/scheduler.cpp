#include "repc/scheduler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "repc/rng.hpp"

namespace repc {

const char* scheduler_name(const SchedulerSpec& s) {
  switch (s.index()) {
    case 0: return "full";
    case 1: return "async_random_subset";
    default: return "stochastic_edges";
  }
}

RoundActivity draw_activity(const SchedulerSpec& spec, const Topology& g,
                            std::uint64_t run_seed, int round) {
  const int n = g.n();
  RoundActivity out;

  if (std::holds_alternative<FullScheduler>(spec)) {
    out.active.resize(n);
    std::iota(out.active.begin(), out.active.end(), 0);
    return out;
  }

  auto eng = make_engine(derive_seed(run_seed, kStreamScheduler,
                                     static_cast<std::uint64_t>(round)));

  if (const auto* a = std::get_if<AsyncRandomSubset>(&spec)) {
    if (a->min_active < 1 || a->min_active > n)
      throw std::invalid_argument("min_active out of range");
    std::uniform_int_distribution<int> size_dist(a->min_active, n);
    int size = size_dist(eng);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < size; ++i) {
      std::uniform_int_distribution<int> pick(i, n - 1);
      std::swap(ids[i], ids[pick(eng)]);
    }
    out.active.assign(ids.begin(), ids.begin() + size);
    std::sort(out.active.begin(), out.active.end());
    return out;
  }

  const auto& st = std::get<StochasticEdges>(spec);
  if (st.edge_prob < 0.0 || st.edge_prob > 1.0)
    throw std::invalid_argument("edge_prob out of range");
  out.active.resize(n);
  std::iota(out.active.begin(), out.active.end(), 0);
  out.edge_alive.assign(static_cast<std::size_t>(n) * n, 0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  // canonical edge order makes the draw independent of everything but
  // (seed, round)
  for (const auto& [u, v] : g.edges()) {
    if (coin(eng) < st.edge_prob)
      out.edge_alive[static_cast<std::size_t>(v) * n + u] = 1;
  }
  return out;
}

}  // namespace repc
