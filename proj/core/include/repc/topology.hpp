#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace repc {

// Directed communication graph on agents 0..n-1. An edge (u, v) means agent
// v reads u's broadcasts. Self loops are implicit: every agent always sees
// its own state, so edges with u == v are rejected.
class Topology {
 public:
  Topology() = default;
  Topology(int n, std::vector<std::pair<int, int>> edges);

  static Topology complete(int n);
  static Topology ring(int n);  // bidirectional ring
  // Random Hamiltonian cycle plus independent extra directed edges, so the
  // result is strongly connected for any extra_edge_prob.
  static Topology random_strongly_connected(int n, double extra_edge_prob,
                                            std::uint64_t seed);

  int n() const { return n_; }
  // Canonical (sorted, deduplicated) edge list.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }

  // Agents v reads, self excluded, ascending.
  const std::vector<int>& in_neighbors(int v) const;
  // Agents v reads, self included, ascending.
  std::vector<int> neighbors(int v) const;

  bool has_edge(int u, int v) const;
  bool strongly_connected() const;
  // Strong connectivity of the subgraph induced on `keep` (ascending ids).
  bool strongly_connected_among(const std::vector<int>& keep) const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> in_;
};

// Assumption audit for a graph plus a candidate compromised set. Advisory
// only: the harness reports it but never refuses to run.
struct AssumptionReport {
  int min_neighborhood_size = 0;         // min over v of |N(v)|, self included
  int min_proper_neighborhood_size = 0;  // same with self excluded
  bool majority_ok = false;              // every regular agent reads fewer
                                         // compromised agents than half of its
                                         // inclusive neighborhood
  bool regular_subgraph_connected = false;
  bool rate_bound_applicable = false;    // min inclusive size > 3

  bool all_ok() const { return majority_ok && regular_subgraph_connected; }
};

AssumptionReport validate_assumptions(const Topology& g,
                                      const std::vector<int>& attacked);

// Piecewise-constant graph sequence. Piece i applies from round pieces[i].from
// until the next piece starts; the last piece applies forever. The first piece
// must start at round 0 and starts must be strictly increasing.
class TopologySchedule {
 public:
  struct Piece {
    int from = 0;
    Topology graph;
  };

  TopologySchedule() = default;
  explicit TopologySchedule(Topology static_graph);
  explicit TopologySchedule(std::vector<Piece> pieces);

  int n() const;
  bool is_static() const { return pieces_.size() == 1; }
  const std::vector<Piece>& pieces() const { return pieces_; }
  const Topology& at(int round) const;

 private:
  std::vector<Piece> pieces_;
};

// JSON forms: {"n": 4, "edges": [[0,1], ...]} for a graph and
// {"pieces": [{"from": 0, "graph": {...}}, ...]} for a schedule.
// Throw std::invalid_argument listing every problem found.
Topology topology_from_json(const std::string& text);
std::string topology_to_json(const Topology& g);
TopologySchedule schedule_from_json(const std::string& text);
std::string schedule_to_json(const TopologySchedule& s);

}  // namespace repc
