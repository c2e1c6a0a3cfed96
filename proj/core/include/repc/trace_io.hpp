#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "repc/harness.hpp"

namespace repc {

// CSV emitters. Values are printed with %.17g so doubles round-trip and
// reruns of the same config are byte-identical. States are reported in the
// input domain.

// Header "k,agent,x"; one row per executed round per agent.
std::string states_csv(const RunResult& r);
// Header "k,agent,neighbor,c"; one row per directed pair evaluated in round
// k. Header-only for the trimmed baseline.
std::string reputations_csv(const RunResult& r);
// Header "mu,sigma,mean_abs_error,std_error,repeats".
std::string sweep_csv(const SweepResult& s);

std::vector<std::tuple<int, int, double>> parse_states_csv(
    const std::string& text);

void write_file(const std::string& path, const std::string& content);
std::string read_file(const std::string& path);

}  // namespace repc
