#include "repc/topology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "repc/rng.hpp"

#include <json.hpp>

namespace repc {
namespace {

using nlohmann::json;

void throw_problems(const std::vector<std::string>& problems) {
  if (problems.empty()) return;
  std::string msg;
  for (std::size_t i = 0; i < problems.size(); ++i) {
    if (i) msg += "; ";
    msg += problems[i];
  }
  throw std::invalid_argument(msg);
}

// Reachability of every node from `start` along `adj`, restricted to `keep`
// (all true when empty).
bool reaches_all(const std::vector<std::vector<int>>& adj, int start,
                 const std::vector<char>& keep) {
  std::vector<char> seen(adj.size(), 0);
  std::queue<int> q;
  seen[start] = 1;
  q.push(start);
  std::size_t count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v]) {
      if (!keep[w] || seen[w]) continue;
      seen[w] = 1;
      ++count;
      q.push(w);
    }
  }
  std::size_t want = 0;
  for (char k : keep) want += k != 0;
  return count == want;
}

}  // namespace

Topology::Topology(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  std::vector<std::string> problems;
  if (n < 1) problems.push_back("n must be at least 1");
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      problems.push_back("edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") out of range");
    } else if (u == v) {
      problems.push_back("self edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") not allowed");
    }
  }
  throw_problems(problems);
  edges_ = std::move(edges);
  in_.assign(n_, {});
  for (const auto& [u, v] : edges_) in_[v].push_back(u);
  for (auto& row : in_) std::sort(row.begin(), row.end());
}

Topology Topology::complete(int n) {
  std::vector<std::pair<int, int>> e;
  e.reserve(static_cast<std::size_t>(n) * (n - 1));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) e.emplace_back(u, v);
  return Topology(n, std::move(e));
}

Topology Topology::ring(int n) {
  if (n < 2) throw std::invalid_argument("ring needs at least 2 agents");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) {
    int w = (v + 1) % n;
    e.emplace_back(v, w);
    e.emplace_back(w, v);
  }
  return Topology(n, std::move(e));
}

Topology Topology::random_strongly_connected(int n, double extra_edge_prob,
                                             std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least 2 agents");
  auto eng = make_engine(seed);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), eng);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(perm[i], perm[(i + 1) % n]);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (coin(eng) < extra_edge_prob) e.emplace_back(u, v);
    }
  }
  return Topology(n, std::move(e));
}

const std::vector<int>& Topology::in_neighbors(int v) const { return in_[v]; }

std::vector<int> Topology::neighbors(int v) const {
  std::vector<int> out = in_[v];
  out.insert(std::upper_bound(out.begin(), out.end(), v), v);
  return out;
}

bool Topology::has_edge(int u, int v) const {
  return std::binary_search(in_[v].begin(), in_[v].end(), u);
}

bool Topology::strongly_connected() const {
  std::vector<int> all(n_);
  std::iota(all.begin(), all.end(), 0);
  return strongly_connected_among(all);
}

bool Topology::strongly_connected_among(const std::vector<int>& keep_ids) const {
  if (keep_ids.empty()) return false;
  std::vector<char> keep(n_, 0);
  for (int v : keep_ids) keep[v] = 1;
  std::vector<std::vector<int>> fwd(n_), rev(n_);
  for (const auto& [u, v] : edges_) {
    fwd[u].push_back(v);
    rev[v].push_back(u);
  }
  int start = keep_ids.front();
  return reaches_all(fwd, start, keep) && reaches_all(rev, start, keep);
}

AssumptionReport validate_assumptions(const Topology& g,
                                      const std::vector<int>& attacked) {
  AssumptionReport r;
  std::vector<char> bad(g.n(), 0);
  for (int a : attacked) bad[a] = 1;

  int min_incl = g.n() + 1;
  bool majority = true;
  for (int v = 0; v < g.n(); ++v) {
    int proper = static_cast<int>(g.in_neighbors(v).size());
    min_incl = std::min(min_incl, proper + 1);
    if (bad[v]) continue;
    int compromised = 0;
    for (int u : g.in_neighbors(v)) compromised += bad[u];
    if (2 * compromised >= proper) majority = false;
  }
  r.min_neighborhood_size = min_incl;
  r.min_proper_neighborhood_size = min_incl - 1;
  r.majority_ok = majority;

  std::vector<int> regular;
  for (int v = 0; v < g.n(); ++v)
    if (!bad[v]) regular.push_back(v);
  r.regular_subgraph_connected = g.strongly_connected_among(regular);
  r.rate_bound_applicable = min_incl > 3;
  return r;
}

TopologySchedule::TopologySchedule(Topology static_graph) {
  pieces_.push_back({0, std::move(static_graph)});
}

TopologySchedule::TopologySchedule(std::vector<Piece> pieces) {
  std::vector<std::string> problems;
  if (pieces.empty()) problems.push_back("schedule needs at least one piece");
  if (!pieces.empty() && pieces.front().from != 0)
    problems.push_back("first piece must start at round 0");
  for (std::size_t i = 1; i < pieces.size(); ++i) {
    if (pieces[i].from <= pieces[i - 1].from)
      problems.push_back("piece starts must be strictly increasing");
    if (pieces[i].graph.n() != pieces[0].graph.n())
      problems.push_back("all pieces must have the same number of agents");
  }
  throw_problems(problems);
  pieces_ = std::move(pieces);
}

int TopologySchedule::n() const {
  return pieces_.empty() ? 0 : pieces_.front().graph.n();
}

const Topology& TopologySchedule::at(int round) const {
  std::size_t i = pieces_.size();
  while (i > 1 && pieces_[i - 1].from > round) --i;
  return pieces_[i - 1].graph;
}

namespace {

Topology topology_from_value(const json& j, std::vector<std::string>& problems,
                             const std::string& where) {
  if (!j.is_object()) {
    problems.push_back(where + ": expected an object");
    return Topology();
  }
  for (const auto& [key, _] : j.items()) {
    if (key != "n" && key != "edges")
      problems.push_back(where + ": unknown key \"" + key + "\"");
  }
  int n = 0;
  if (!j.contains("n") || !j["n"].is_number_integer())
    problems.push_back(where + ": \"n\" must be an integer");
  else
    n = j["n"].get<int>();
  std::vector<std::pair<int, int>> edges;
  if (!j.contains("edges") || !j["edges"].is_array()) {
    problems.push_back(where + ": \"edges\" must be an array");
  } else {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
          !e[1].is_number_integer()) {
        problems.push_back(where + ": each edge must be a pair of integers");
        continue;
      }
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  if (!problems.empty()) return Topology();
  try {
    return Topology(n, std::move(edges));
  } catch (const std::invalid_argument& ex) {
    problems.push_back(where + ": " + ex.what());
    return Topology();
  }
}

}  // namespace

Topology topology_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("invalid JSON");
  std::vector<std::string> problems;
  Topology g = topology_from_value(j, problems, "graph");
  throw_problems(problems);
  return g;
}

std::string topology_to_json(const Topology& g) {
  json j;
  j["n"] = g.n();
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j.dump(2) + "\n";
}

TopologySchedule schedule_from_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("invalid JSON");
  std::vector<std::string> problems;
  if (!j.is_object() || !j.contains("pieces") || !j["pieces"].is_array()) {
    throw std::invalid_argument("schedule: expected {\"pieces\": [...]}");
  }
  for (const auto& [key, _] : j.items()) {
    if (key != "pieces")
      problems.push_back("schedule: unknown key \"" + key + "\"");
  }
  std::vector<TopologySchedule::Piece> pieces;
  int idx = 0;
  for (const auto& p : j["pieces"]) {
    std::string where = "pieces[" + std::to_string(idx++) + "]";
    if (!p.is_object() || !p.contains("from") || !p.contains("graph") ||
        !p["from"].is_number_integer()) {
      problems.push_back(where + ": expected {\"from\": int, \"graph\": {...}}");
      continue;
    }
    for (const auto& [key, _] : p.items()) {
      if (key != "from" && key != "graph")
        problems.push_back(where + ": unknown key \"" + key + "\"");
    }
    pieces.push_back({p["from"].get<int>(),
                      topology_from_value(p["graph"], problems, where)});
  }
  throw_problems(problems);
  try {
    return TopologySchedule(std::move(pieces));
  } catch (const std::invalid_argument& ex) {
    throw std::invalid_argument(std::string("schedule: ") + ex.what());
  }
}

std::string schedule_to_json(const TopologySchedule& s) {
  json j;
  j["pieces"] = json::array();
  for (const auto& p : s.pieces()) {
    json piece;
    piece["from"] = p.from;
    piece["graph"] = json::parse(topology_to_json(p.graph));
    j["pieces"].push_back(piece);
  }
  return j.dump(2) + "\n";
}

}  // namespace repc
