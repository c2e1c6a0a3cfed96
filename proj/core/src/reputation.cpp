#include "repc/reputation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace repc {

double fmin(const std::vector<double>& values, int f) {
  if (values.empty()) throw std::invalid_argument("fmin on empty input");
  if (f < 1) throw std::invalid_argument("fmin needs f >= 1");
  std::vector<double> distinct = values;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()),
                 distinct.end());
  int m = static_cast<int>(distinct.size());
  if (m == 1) return distinct[0];
  // cap at the largest value strictly below the maximum
  return distinct[std::min(f, m - 1) - 1];
}

std::vector<double> raw_reputation(const std::vector<double>& neighbor_x,
                                   double self_x, bool include_self,
                                   OpCounts* ops) {
  OpCounts local;
  OpCounts& tally = ops ? *ops : local;

  // value-sorted comparison set, so the sums below depend only on the
  // multiset of states and never on agent ids
  std::vector<double> sorted = neighbor_x;
  if (include_self) sorted.push_back(self_x);
  std::sort(sorted.begin(), sorted.end());

  const double inclusive_size = static_cast<double>(neighbor_x.size()) + 1.0;
  std::vector<double> raw(neighbor_x.size());
  for (std::size_t j = 0; j < neighbor_x.size(); ++j) {
    double sum = 0.0;
    for (double v : sorted) sum += std::abs(neighbor_x[j] - v);
    raw[j] = 1.0 - sum / inclusive_size;
    tally.discrepancy += 3 * sorted.size() + 2;  // sub+abs+add each, div, sub
  }
  return raw;
}

std::vector<double> normalize_reputation(const std::vector<double>& raw, int f,
                                         OpCounts* ops) {
  OpCounts local;
  OpCounts& tally = ops ? *ops : local;

  double lo = fmin(raw, f);
  double hi = *std::max_element(raw.begin(), raw.end());
  std::vector<double> out(raw.size());
  if (hi == lo) {
    std::fill(out.begin(), out.end(), 1.0);
    return out;
  }
  const double span = hi - lo;
  tally.normalize += 1;
  for (std::size_t j = 0; j < raw.size(); ++j) {
    out[j] = (raw[j] - lo) / span;
    tally.normalize += 2;
  }
  return out;
}

double apply_confidence(double normalized, int k, double epsilon,
                        bool* floored) {
  bool floor = !(normalized > 0.0);
  if (floored) *floored = floor;
  return floor ? std::pow(epsilon, k + 1) : normalized;
}

}  // namespace repc
