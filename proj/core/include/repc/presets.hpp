#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "repc/config.hpp"
#include "repc/harness.hpp"

namespace repc {

// Canned scenarios mirroring the situations the scheme is meant to handle:
// clean consensus, near-consensus and paired attackers, partial activity,
// switching graphs, lossy links, trimmed-mean comparisons and the noise
// error sweep.
struct Preset {
  std::string name;
  std::string description;
  SimConfig config;
  // Same scenario under the trimmed baseline, for side-by-side runs.
  std::optional<SimConfig> baseline_config;
  // Present only for the sweep preset.
  std::optional<SweepGrid> sweep_grid;
  // Run the attack-free twin first and use its consensus as reference.
  bool compute_reference = false;
};

std::vector<std::string> preset_names();

// Throws std::invalid_argument for unknown names. `seed` overrides the
// preset's fixed default; `desk_scale` shrinks the heavy presets (fewer
// sweep repeats) for quick runs.
Preset make_preset(const std::string& name,
                   std::optional<std::uint64_t> seed = std::nullopt,
                   bool desk_scale = false);

}  // namespace repc
