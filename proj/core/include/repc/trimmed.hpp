#pragma once

#include <cstdint>
#include <vector>

#include "repc/params.hpp"
#include "repc/state.hpp"
#include "repc/topology.hpp"

namespace repc {

// Trimmed-mean averaging baseline: each agent drops the f_trim lowest and
// f_trim highest values among its proper neighbors' states and moves to the
// mean of the remainder. Agents whose proper neighborhood is not larger than
// 2*f_trim hold their state; `held` (size n) reports them. Confidences are
// untouched.
NetworkState trimmed_step(const NetworkState& s, const Topology& g,
                          const TrimmedParams& p,
                          std::vector<std::uint8_t>* held = nullptr);

}  // namespace repc
