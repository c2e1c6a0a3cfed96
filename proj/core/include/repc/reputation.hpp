#pragma once

#include <cstdint>
#include <vector>

namespace repc {

// Arithmetic tally for the three stages of the reputation pipeline
// (additions, subtractions, multiplications, divisions, absolute values;
// comparisons and data movement excluded).
struct OpCounts {
  std::uint64_t discrepancy = 0;
  std::uint64_t normalize = 0;
  std::uint64_t update = 0;

  std::uint64_t total() const { return discrepancy + normalize + update; }
  void operator+=(const OpCounts& o) {
    discrepancy += o.discrepancy;
    normalize += o.normalize;
    update += o.update;
  }
};

// f-th smallest distinct value. Saturates at the largest distinct value
// strictly below the maximum; a single-valued input returns that value.
// Precondition: values nonempty, f >= 1.
double fmin(const std::vector<double>& values, int f);

// Raw reputations agent i assigns to its proper neighbors, aligned with
// neighbor_x. Each entry is 1 minus the neighbor's mean absolute discrepancy
// against the neighborhood: the comparison set is neighbor_x plus self_x when
// include_self is set, and the divisor is the inclusive neighborhood size
// |neighbor_x| + 1 either way. Sums run in value order so the result depends
// only on the value multiset.
std::vector<double> raw_reputation(const std::vector<double>& neighbor_x,
                                   double self_x, bool include_self,
                                   OpCounts* ops = nullptr);

// Min-max rescaling of raw reputations with the floor anchored at
// fmin(raw, f): entries at the anchor map to 0, the maximum maps to 1,
// entries below the anchor go negative. Degenerate spread maps everything
// to 1.
std::vector<double> normalize_reputation(const std::vector<double>& raw, int f,
                                         OpCounts* ops = nullptr);

// Positive normalized reputations pass through; the rest drop to the floor
// epsilon^(k+1), where k is the index of the round being executed. `floored`
// reports which branch was taken.
double apply_confidence(double normalized, int k, double epsilon,
                        bool* floored = nullptr);

}  // namespace repc
