#include "repc/adversary.hpp"

#include <algorithm>
#include <cmath>

#include "repc/rng.hpp"

namespace repc {
namespace {

// Rescale a strategy's value parameters into normalized units. Offsets apply
// to absolute values (constant, target, mu, replay samples); sigma only
// scales.
AttackStrategy normalize_strategy(const AttackStrategy& s, const Bijection& b) {
  if (const auto* c = std::get_if<ConstantAttack>(&s))
    return ConstantAttack{b.to_normalized(c->value)};
  if (const auto* c = std::get_if<ConvergingAttack>(&s))
    return ConvergingAttack{b.to_normalized(c->target), c->rate};
  if (const auto* g = std::get_if<GaussianNoiseAttack>(&s))
    return GaussianNoiseAttack{b.to_normalized(g->mu), g->sigma / b.scale,
                               g->clamp};
  const auto& r = std::get<ReplayAttack>(s);
  ReplayAttack out;
  out.values.reserve(r.values.size());
  for (double v : r.values) out.values.push_back(b.to_normalized(v));
  return out;
}

}  // namespace

const char* strategy_name(const AttackStrategy& s) {
  switch (s.index()) {
    case 0: return "constant";
    case 1: return "converging";
    case 2: return "gaussian_noise";
    default: return "replay";
  }
}

Injector::Injector(std::vector<AttackSpec> specs, const Bijection& bijection,
                   std::uint64_t seed)
    : seed_(seed) {
  for (auto& spec : specs) {
    spec.strategy = normalize_strategy(spec.strategy, bijection);
    std::sort(spec.agents.begin(), spec.agents.end());
    spec.agents.erase(std::unique(spec.agents.begin(), spec.agents.end()),
                      spec.agents.end());
    for (int a : spec.agents) attacked_.push_back(a);
    specs_.push_back(std::move(spec));
  }
  std::sort(attacked_.begin(), attacked_.end());
  attacked_.erase(std::unique(attacked_.begin(), attacked_.end()),
                  attacked_.end());
}

void Injector::apply(std::vector<double>& x, int k) {
  for (const auto& spec : specs_) {
    if (k < spec.start_round) continue;
    for (int a : spec.agents) {
      if (const auto* c = std::get_if<ConstantAttack>(&spec.strategy)) {
        x[a] = c->value;
      } else if (const auto* c =
                     std::get_if<ConvergingAttack>(&spec.strategy)) {
        auto [it, inserted] = anchors_.try_emplace(a, x[a]);
        double anchor = it->second;
        x[a] = c->target + (anchor - c->target) *
                               std::pow(c->rate, k - spec.start_round + 1);
      } else if (const auto* gsn =
                     std::get_if<GaussianNoiseAttack>(&spec.strategy)) {
        auto eng = make_engine(derive_seed(
            seed_, kStreamAttack, static_cast<std::uint64_t>(a),
            static_cast<std::uint64_t>(k)));
        std::normal_distribution<double> dist(gsn->mu, gsn->sigma);
        double v = dist(eng);
        if (gsn->clamp) v = std::clamp(v, 0.0, 1.0);
        x[a] = v;
      } else {
        const auto& r = std::get<ReplayAttack>(spec.strategy);
        x[a] = r.values[(k - spec.start_round) % r.values.size()];
      }
    }
  }
}

}  // namespace repc
