#pragma once

namespace repc {

enum class Algorithm { kRepc, kTrimmed };

// Tunables of the reputation update. The self-inclusion and freshness knobs
// select between closely related published variants; the defaults are the
// combination that reproduces the reference 5-agent run (see the acceptance
// suite's variant table).
struct RepcParams {
  double epsilon = 0.1;  // confidence floor base; the floor is epsilon^(k+1)
  int f = 1;             // assumed bound on compromised agents per neighborhood
  bool include_self_in_discrepancy = true;
  bool include_self_in_update = false;
  bool fresh_reputation_in_update = true;
};

struct TrimmedParams {
  int f_trim = 1;  // values trimmed from each end of the neighbor pool
};

// Detection: a neighbor is flagged when its confidence sat on the floor for
// the last `window` rounds in which the pair was evaluated and the final
// states still disagree by more than `state_tol` (normalized units).
struct DetectParams {
  int window = 10;
  double state_tol = 1e-6;
};

}  // namespace repc
