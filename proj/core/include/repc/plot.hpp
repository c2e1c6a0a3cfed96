#pragma once

#include <optional>
#include <string>

#include "repc/harness.hpp"

namespace repc {

struct PlotOptions {
  int width = 960;
  int height = 540;
  std::optional<double> reference;  // horizontal marker, input domain
  std::string title;
};

// Self-contained SVG line chart of the run's broadcast trajectories (input
// domain). Each agent gets one polyline tagged data-agent="i"; compromised
// agents are drawn dashed with class "agent attacked". Throws
// std::invalid_argument on an empty trace.
std::string plot_svg(const RunResult& r, const PlotOptions& opt = {});

}  // namespace repc
