#include "repc/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>

#include <json.hpp>

namespace repc {
namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}

struct Parser {
  std::vector<std::string> problems;

  void check_keys(const json& j, const std::string& where,
                  std::initializer_list<const char*> allowed) {
    for (const auto& [key, _] : j.items()) {
      if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) {
            return key == a;
          }) == allowed.end()) {
        problems.push_back(where + ": unknown key \"" + key + "\"");
      }
    }
  }

  bool want_object(const json& j, const std::string& where) {
    if (j.is_object()) return true;
    problems.push_back(where + ": expected an object");
    return false;
  }

  double number(const json& j, const std::string& where, double fallback) {
    if (!j.is_number()) {
      problems.push_back(where + ": expected a number");
      return fallback;
    }
    double v = j.get<double>();
    if (!std::isfinite(v)) {
      problems.push_back(where + ": must be finite");
      return fallback;
    }
    return v;
  }

  int integer(const json& j, const std::string& where, int fallback) {
    if (!j.is_number_integer()) {
      problems.push_back(where + ": expected an integer");
      return fallback;
    }
    return j.get<int>();
  }

  bool boolean(const json& j, const std::string& where, bool fallback) {
    if (!j.is_boolean()) {
      problems.push_back(where + ": expected a boolean");
      return fallback;
    }
    return j.get<bool>();
  }

  Topology graph(const json& j, const std::string& where) {
    if (!want_object(j, where)) return Topology();
    const std::size_t before = problems.size();
    check_keys(j, where, {"n", "edges"});
    int n = j.contains("n") ? integer(j["n"], where + ".n", 0) : 0;
    if (!j.contains("n")) problems.push_back(where + ": missing \"n\"");
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
    if (problems.size() > before && n < 1) return Topology();
    try {
      return Topology(n, std::move(edges));
    } catch (const std::invalid_argument& ex) {
      problems.push_back(where + ": " + ex.what());
      return Topology();
    }
  }

  TopologySchedule schedule(const json& j) {
    if (!want_object(j, "schedule")) return TopologySchedule();
    const std::size_t before = problems.size();
    if (j.contains("pieces")) {
      check_keys(j, "schedule", {"pieces"});
      if (!j["pieces"].is_array()) {
        problems.push_back("schedule.pieces: expected an array");
        return TopologySchedule();
      }
      std::vector<TopologySchedule::Piece> pieces;
      int idx = 0;
      for (const auto& p : j["pieces"]) {
        std::string where = "schedule.pieces[" + std::to_string(idx++) + "]";
        if (!want_object(p, where)) continue;
        check_keys(p, where, {"from", "graph"});
        int from = p.contains("from") ? integer(p["from"], where + ".from", 0)
                                      : (problems.push_back(where +
                                                            ": missing \"from\""),
                                         0);
        if (!p.contains("graph")) {
          problems.push_back(where + ": missing \"graph\"");
          continue;
        }
        pieces.push_back({from, graph(p["graph"], where + ".graph")});
      }
      if (problems.size() > before) return TopologySchedule();
      try {
        return TopologySchedule(std::move(pieces));
      } catch (const std::invalid_argument& ex) {
        problems.push_back(std::string("schedule: ") + ex.what());
        return TopologySchedule();
      }
    }
    // static shorthand: a plain graph object
    Topology g = graph(j, "schedule");
    if (problems.size() > before) return TopologySchedule();
    return TopologySchedule(std::move(g));
  }

  AttackSpec attack(const json& j, const std::string& where, int n) {
    AttackSpec spec;
    if (!want_object(j, where)) return spec;
    if (!j.contains("agents") || !j["agents"].is_array() ||
        j["agents"].empty()) {
      problems.push_back(where + ": \"agents\" must be a nonempty array");
    } else {
      for (const auto& a : j["agents"]) {
        int id = integer(a, where + ".agents", -1);
        if (id < 0 || (n > 0 && id >= n))
          problems.push_back(where + ": agent id out of range");
        else
          spec.agents.push_back(id);
      }
    }
    if (j.contains("start_round")) {
      spec.start_round = integer(j["start_round"], where + ".start_round", 1);
      if (spec.start_round < 1)
        problems.push_back(where + ": start_round must be >= 1");
    }
    std::string strat;
    if (!j.contains("strategy") || !j["strategy"].is_string()) {
      problems.push_back(where + ": \"strategy\" must be a string");
      return spec;
    }
    strat = j["strategy"].get<std::string>();
    if (strat == "constant") {
      check_keys(j, where, {"agents", "start_round", "strategy", "value"});
      ConstantAttack c;
      if (j.contains("value"))
        c.value = number(j["value"], where + ".value", 0.0);
      else
        problems.push_back(where + ": constant attack needs \"value\"");
      spec.strategy = c;
    } else if (strat == "converging") {
      check_keys(j, where,
                 {"agents", "start_round", "strategy", "target", "rate"});
      ConvergingAttack c;
      if (j.contains("target"))
        c.target = number(j["target"], where + ".target", 0.0);
      else
        problems.push_back(where + ": converging attack needs \"target\"");
      if (j.contains("rate")) c.rate = number(j["rate"], where + ".rate", 0.5);
      if (!(c.rate > 0.0 && c.rate < 1.0))
        problems.push_back(where + ": rate must be in (0, 1)");
      spec.strategy = c;
    } else if (strat == "gaussian_noise") {
      check_keys(j, where,
                 {"agents", "start_round", "strategy", "mu", "sigma", "clamp"});
      GaussianNoiseAttack gsn;
      if (j.contains("mu")) gsn.mu = number(j["mu"], where + ".mu", 0.0);
      if (j.contains("sigma"))
        gsn.sigma = number(j["sigma"], where + ".sigma", 1.0);
      if (gsn.sigma < 0.0)
        problems.push_back(where + ": sigma must be >= 0");
      if (j.contains("clamp"))
        gsn.clamp = boolean(j["clamp"], where + ".clamp", true);
      spec.strategy = gsn;
    } else if (strat == "replay") {
      check_keys(j, where, {"agents", "start_round", "strategy", "values"});
      ReplayAttack r;
      if (!j.contains("values") || !j["values"].is_array() ||
          j["values"].empty()) {
        problems.push_back(where + ": replay attack needs nonempty \"values\"");
      } else {
        for (const auto& v : j["values"])
          r.values.push_back(number(v, where + ".values", 0.0));
      }
      spec.strategy = r;
    } else {
      problems.push_back(where + ": unknown strategy \"" + strat + "\"");
    }
    return spec;
  }

  SchedulerSpec scheduler(const json& j, int n) {
    if (!want_object(j, "scheduler")) return FullScheduler{};
    if (!j.contains("type") || !j["type"].is_string()) {
      problems.push_back("scheduler: \"type\" must be a string");
      return FullScheduler{};
    }
    std::string type = j["type"].get<std::string>();
    if (type == "full") {
      check_keys(j, "scheduler", {"type"});
      return FullScheduler{};
    }
    if (type == "async_random_subset") {
      check_keys(j, "scheduler", {"type", "min_active"});
      AsyncRandomSubset a;
      if (j.contains("min_active"))
        a.min_active = integer(j["min_active"], "scheduler.min_active", 1);
      if (a.min_active < 1 || (n > 0 && a.min_active > n))
        problems.push_back("scheduler: min_active out of range");
      return a;
    }
    if (type == "stochastic_edges") {
      check_keys(j, "scheduler", {"type", "edge_prob"});
      StochasticEdges st;
      if (j.contains("edge_prob"))
        st.edge_prob = number(j["edge_prob"], "scheduler.edge_prob", 1.0);
      if (!(st.edge_prob >= 0.0 && st.edge_prob <= 1.0))
        problems.push_back("scheduler: edge_prob must be in [0, 1]");
      return st;
    }
    problems.push_back("scheduler: unknown type \"" + type + "\"");
    return FullScheduler{};
  }
};

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), problems_(std::move(problems)) {}

std::vector<int> SimConfig::attacked_agents() const {
  std::vector<int> out;
  for (const auto& a : attacks)
    out.insert(out.end(), a.agents.begin(), a.agents.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

SimConfig parse_config(const std::string& json_text) {
  json j = json::parse(json_text, nullptr, false);
  if (j.is_discarded()) throw ConfigError({"invalid JSON"});
  Parser p;
  SimConfig cfg;
  if (!j.is_object()) throw ConfigError({"config must be a JSON object"});

  p.check_keys(j, "config",
               {"schedule", "x0", "algorithm", "params", "attacks", "attack",
                "scheduler", "delta", "round_cap", "seed", "detect",
                "outputs"});

  if (!j.contains("schedule"))
    p.problems.push_back("config: missing \"schedule\"");
  else
    cfg.schedule = p.schedule(j["schedule"]);
  const int n = cfg.schedule.n();

  if (!j.contains("x0") || !j["x0"].is_array()) {
    p.problems.push_back("config: \"x0\" must be an array");
  } else {
    for (const auto& v : j["x0"])
      cfg.x0.push_back(p.number(v, "x0", 0.0));
    if (n > 0 && static_cast<int>(cfg.x0.size()) != n)
      p.problems.push_back("x0: size " + std::to_string(cfg.x0.size()) +
                           " does not match n=" + std::to_string(n));
  }

  if (j.contains("algorithm")) {
    if (!j["algorithm"].is_string()) {
      p.problems.push_back("algorithm: expected a string");
    } else {
      std::string a = j["algorithm"].get<std::string>();
      if (a == "repc")
        cfg.algorithm = Algorithm::kRepc;
      else if (a == "trimmed")
        cfg.algorithm = Algorithm::kTrimmed;
      else
        p.problems.push_back("algorithm: unknown value \"" + a + "\"");
    }
  }

  if (j.contains("params") && p.want_object(j["params"], "params")) {
    const json& q = j["params"];
    p.check_keys(q, "params",
                 {"epsilon", "f", "include_self_in_discrepancy",
                  "include_self_in_update", "fresh_reputation_in_update",
                  "f_trim"});
    if (q.contains("epsilon"))
      cfg.params.epsilon = p.number(q["epsilon"], "params.epsilon", 0.1);
    if (!(cfg.params.epsilon > 0.0 && cfg.params.epsilon < 1.0))
      p.problems.push_back("params: epsilon must be in (0, 1)");
    if (q.contains("f")) cfg.params.f = p.integer(q["f"], "params.f", 1);
    if (cfg.params.f < 1) p.problems.push_back("params: f must be >= 1");
    if (q.contains("include_self_in_discrepancy"))
      cfg.params.include_self_in_discrepancy = p.boolean(
          q["include_self_in_discrepancy"],
          "params.include_self_in_discrepancy", true);
    if (q.contains("include_self_in_update"))
      cfg.params.include_self_in_update = p.boolean(
          q["include_self_in_update"], "params.include_self_in_update", false);
    if (q.contains("fresh_reputation_in_update"))
      cfg.params.fresh_reputation_in_update =
          p.boolean(q["fresh_reputation_in_update"],
                    "params.fresh_reputation_in_update", true);
    if (q.contains("f_trim"))
      cfg.trimmed.f_trim = p.integer(q["f_trim"], "params.f_trim", 1);
    if (cfg.trimmed.f_trim < 0)
      p.problems.push_back("params: f_trim must be >= 0");
  }

  if (j.contains("attack") && j.contains("attacks"))
    p.problems.push_back("config: give either \"attack\" or \"attacks\"");
  if (j.contains("attack"))
    cfg.attacks.push_back(p.attack(j["attack"], "attack", n));
  if (j.contains("attacks")) {
    if (!j["attacks"].is_array()) {
      p.problems.push_back("attacks: expected an array");
    } else {
      int idx = 0;
      for (const auto& a : j["attacks"])
        cfg.attacks.push_back(
            p.attack(a, "attacks[" + std::to_string(idx++) + "]", n));
    }
  }
  {
    std::set<int> seen;
    for (const auto& a : cfg.attacks) {
      for (int id : a.agents) {
        if (!seen.insert(id).second)
          p.problems.push_back("attacks: agent " + std::to_string(id) +
                               " appears in more than one attack");
      }
    }
  }

  if (j.contains("scheduler")) cfg.scheduler = p.scheduler(j["scheduler"], n);
  if (cfg.algorithm == Algorithm::kTrimmed &&
      !std::holds_alternative<FullScheduler>(cfg.scheduler))
    p.problems.push_back(
        "scheduler: the trimmed baseline only supports the full scheduler");

  if (j.contains("delta"))
    cfg.delta = p.number(j["delta"], "delta", 1e-9);
  if (!(cfg.delta > 0.0)) p.problems.push_back("delta: must be > 0");

  if (j.contains("round_cap")) {
    cfg.round_cap = p.integer(j["round_cap"], "round_cap", 0);
    if (cfg.round_cap < 0) p.problems.push_back("round_cap: must be >= 0");
  }

  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer() || j["seed"].get<double>() < 0)
      p.problems.push_back("seed: must be a non-negative integer");
    else
      cfg.seed = j["seed"].get<std::uint64_t>();
  } else {
    cfg.seed = 0;
    cfg.seed_defaulted = true;
  }

  if (j.contains("detect") && p.want_object(j["detect"], "detect")) {
    const json& d = j["detect"];
    p.check_keys(d, "detect", {"window", "state_tol"});
    if (d.contains("window"))
      cfg.detect.window = p.integer(d["window"], "detect.window", 10);
    if (cfg.detect.window < 1)
      p.problems.push_back("detect: window must be >= 1");
    if (d.contains("state_tol"))
      cfg.detect.state_tol = p.number(d["state_tol"], "detect.state_tol", 1e-6);
    if (!(cfg.detect.state_tol >= 0.0))
      p.problems.push_back("detect: state_tol must be >= 0");
  }

  if (j.contains("outputs") && p.want_object(j["outputs"], "outputs")) {
    const json& o = j["outputs"];
    p.check_keys(o, "outputs",
                 {"dir", "states_csv", "reputations_csv", "plot_svg",
                  "summary_json"});
    if (o.contains("dir")) {
      if (!o["dir"].is_string())
        p.problems.push_back("outputs.dir: expected a string");
      else
        cfg.outputs.dir = o["dir"].get<std::string>();
    }
    if (o.contains("states_csv"))
      cfg.outputs.states_csv =
          p.boolean(o["states_csv"], "outputs.states_csv", true);
    if (o.contains("reputations_csv"))
      cfg.outputs.reputations_csv =
          p.boolean(o["reputations_csv"], "outputs.reputations_csv", true);
    if (o.contains("plot_svg"))
      cfg.outputs.plot_svg = p.boolean(o["plot_svg"], "outputs.plot_svg", true);
    if (o.contains("summary_json"))
      cfg.outputs.summary_json =
          p.boolean(o["summary_json"], "outputs.summary_json", true);
  }

  for (double v : cfg.x0) {
    if (!std::isfinite(v)) {
      p.problems.push_back("x0: values must be finite");
      break;
    }
  }

  if (!p.problems.empty()) throw ConfigError(std::move(p.problems));
  return cfg;
}

SimConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError({"cannot open " + path});
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

namespace {

json graph_to_value(const Topology& g) {
  json j;
  j["n"] = g.n();
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edges()) j["edges"].push_back({u, v});
  return j;
}

json attack_to_value(const AttackSpec& a) {
  json j;
  j["agents"] = a.agents;
  j["start_round"] = a.start_round;
  j["strategy"] = strategy_name(a.strategy);
  if (const auto* c = std::get_if<ConstantAttack>(&a.strategy)) {
    j["value"] = c->value;
  } else if (const auto* c = std::get_if<ConvergingAttack>(&a.strategy)) {
    j["target"] = c->target;
    j["rate"] = c->rate;
  } else if (const auto* g = std::get_if<GaussianNoiseAttack>(&a.strategy)) {
    j["mu"] = g->mu;
    j["sigma"] = g->sigma;
    j["clamp"] = g->clamp;
  } else {
    j["values"] = std::get<ReplayAttack>(a.strategy).values;
  }
  return j;
}

}  // namespace

std::string config_to_json(const SimConfig& cfg) {
  json j;
  if (cfg.schedule.is_static()) {
    j["schedule"] = graph_to_value(cfg.schedule.at(0));
  } else {
    j["schedule"]["pieces"] = json::array();
    for (const auto& piece : cfg.schedule.pieces()) {
      json p;
      p["from"] = piece.from;
      p["graph"] = graph_to_value(piece.graph);
      j["schedule"]["pieces"].push_back(p);
    }
  }
  j["x0"] = cfg.x0;
  j["algorithm"] = cfg.algorithm == Algorithm::kRepc ? "repc" : "trimmed";
  j["params"]["epsilon"] = cfg.params.epsilon;
  j["params"]["f"] = cfg.params.f;
  j["params"]["include_self_in_discrepancy"] =
      cfg.params.include_self_in_discrepancy;
  j["params"]["include_self_in_update"] = cfg.params.include_self_in_update;
  j["params"]["fresh_reputation_in_update"] =
      cfg.params.fresh_reputation_in_update;
  j["params"]["f_trim"] = cfg.trimmed.f_trim;
  if (!cfg.attacks.empty()) {
    j["attacks"] = json::array();
    for (const auto& a : cfg.attacks) j["attacks"].push_back(attack_to_value(a));
  }
  j["scheduler"]["type"] = scheduler_name(cfg.scheduler);
  if (const auto* a = std::get_if<AsyncRandomSubset>(&cfg.scheduler))
    j["scheduler"]["min_active"] = a->min_active;
  if (const auto* st = std::get_if<StochasticEdges>(&cfg.scheduler))
    j["scheduler"]["edge_prob"] = st->edge_prob;
  j["delta"] = cfg.delta;
  j["round_cap"] = cfg.round_cap;
  j["seed"] = cfg.seed;
  j["detect"]["window"] = cfg.detect.window;
  j["detect"]["state_tol"] = cfg.detect.state_tol;
  j["outputs"]["dir"] = cfg.outputs.dir;
  j["outputs"]["states_csv"] = cfg.outputs.states_csv;
  j["outputs"]["reputations_csv"] = cfg.outputs.reputations_csv;
  j["outputs"]["plot_svg"] = cfg.outputs.plot_svg;
  j["outputs"]["summary_json"] = cfg.outputs.summary_json;
  return j.dump(2) + "\n";
}

}  // namespace repc
