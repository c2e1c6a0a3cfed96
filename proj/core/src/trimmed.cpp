#include "repc/trimmed.hpp"

#include <algorithm>
#include <stdexcept>

namespace repc {

NetworkState trimmed_step(const NetworkState& s, const Topology& g,
                          const TrimmedParams& p,
                          std::vector<std::uint8_t>* held) {
  const int n = s.n();
  if (g.n() != n) throw std::invalid_argument("graph/state size mismatch");
  if (p.f_trim < 0) throw std::invalid_argument("f_trim must be >= 0");

  NetworkState next = s;
  next.k = s.k + 1;
  if (held) held->assign(n, 0);

  std::vector<double> pool;
  for (int i = 0; i < n; ++i) {
    const auto& nb = g.in_neighbors(i);
    if (static_cast<int>(nb.size()) <= 2 * p.f_trim) {
      if (held) (*held)[i] = 1;
      continue;
    }
    pool.clear();
    for (int j : nb) pool.push_back(s.x[j]);
    std::sort(pool.begin(), pool.end());
    double sum = 0.0;
    int count = 0;
    for (std::size_t idx = p.f_trim; idx < pool.size() - p.f_trim; ++idx) {
      sum += pool[idx];
      ++count;
    }
    next.x[i] = sum / count;
  }
  return next;
}

}  // namespace repc
