#pragma once

#include <cstddef>
#include <vector>

namespace repc {

// Affine map between the input domain and the normalized [0, 1] domain the
// update rule runs in: raw = offset + scale * normalized. Degenerate inputs
// (all equal) keep scale 1 so the map stays invertible.
struct Bijection {
  double offset = 0.0;
  double scale = 1.0;

  double to_normalized(double raw) const { return (raw - offset) / scale; }
  double to_raw(double normalized) const { return offset + scale * normalized; }
};

inline Bijection make_bijection(const std::vector<double>& x0_raw) {
  Bijection b;
  if (x0_raw.empty()) return b;
  double lo = x0_raw[0];
  double hi = x0_raw[0];
  for (double v : x0_raw) {
    if (v < lo) lo = v;
    if (v > hi) hi = v;
  }
  b.offset = lo;
  b.scale = hi > lo ? hi - lo : 1.0;
  return b;
}

// Network snapshot. States live in the normalized domain; confidences sit in
// a dense row-major n*n matrix where row i is agent i's view. Pairs that were
// never evaluated keep the bootstrap value 1, which also covers neighbors
// first seen mid-run under a switching topology.
struct NetworkState {
  int k = 0;              // rounds applied so far
  std::vector<double> x;  // size n
  std::vector<double> c;  // size n*n

  static NetworkState initial(const std::vector<double>& x0_normalized) {
    NetworkState s;
    s.x = x0_normalized;
    s.c.assign(x0_normalized.size() * x0_normalized.size(), 1.0);
    return s;
  }

  int n() const { return static_cast<int>(x.size()); }
  double confidence(int i, int j) const {
    return c[static_cast<std::size_t>(i) * x.size() + j];
  }
};

}  // namespace repc
