#include "repc/plot.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <string>

namespace repc {
namespace {

std::size_t count_occurrences(const std::string& text, const std::string& sub) {
  std::size_t count = 0;
  for (std::size_t pos = text.find(sub); pos != std::string::npos;
       pos = text.find(sub, pos + sub.size()))
    ++count;
  return count;
}

RunResult attacked_run() {
  SimConfig cfg;
  cfg.schedule = TopologySchedule(Topology::complete(5));
  cfg.x0 = {1.0, 0.0, 3.0, 1.2, 2.5};
  cfg.attacks = {AttackSpec{{2}, ConstantAttack{3.0}, 1}};
  cfg.seed = 1;
  return run(cfg);
}

TEST(Plot, OnePolylinePerAgentTaggedWithItsId) {
  RunResult r = attacked_run();
  std::string svg = plot_svg(r);
  EXPECT_EQ(count_occurrences(svg, "<polyline"), 5u);
  for (int i = 0; i < 5; ++i)
    EXPECT_NE(svg.find("data-agent=\"" + std::to_string(i) + "\""),
              std::string::npos);
  EXPECT_EQ(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0), 0u);
  EXPECT_NE(svg.find("fill=\"white\""), std::string::npos);
}

TEST(Plot, AttackedAgentsAreDashedAndClassed) {
  std::string svg = plot_svg(attacked_run());
  EXPECT_EQ(count_occurrences(svg, "class=\"agent attacked\""), 1u);
  EXPECT_EQ(count_occurrences(svg, "stroke-dasharray=\"6,3\""), 1u);
  // the dashed polyline is the attacked one
  std::size_t at = svg.find("class=\"agent attacked\"");
  std::size_t line_end = svg.find("/>", at);
  std::string elem = svg.substr(at, line_end - at);
  EXPECT_NE(elem.find("data-agent=\"2\""), std::string::npos);
}

TEST(Plot, ReferenceLineIsDrawnWhenRequested) {
  PlotOptions opt;
  opt.reference = 1.489;
  std::string svg = plot_svg(attacked_run(), opt);
  EXPECT_EQ(count_occurrences(svg, "class=\"reference\""), 1u);
  std::string without = plot_svg(attacked_run());
  EXPECT_EQ(count_occurrences(without, "class=\"reference\""), 0u);
}

TEST(Plot, TitleControlsHeaderText) {
  PlotOptions opt;
  opt.title = "demo run";
  std::string svg = plot_svg(attacked_run(), opt);
  EXPECT_NE(svg.find(">demo run</text>"), std::string::npos);
}

TEST(Plot, FinalOrdinateLandsWhereTheValueSays) {
  // two agents pinned by a constant attack at the extremes: the attacked
  // polyline's last y must map the raw value through the plot's own scale
  RunResult r = attacked_run();
  PlotOptions opt;
  std::string svg = plot_svg(r, opt);

  // recover the attacked polyline's last point
  std::size_t at = svg.find("class=\"agent attacked\"");
  ASSERT_NE(at, std::string::npos);
  std::size_t pts = svg.find("points=\"", at) + 8;
  std::size_t end = svg.find('"', pts);
  std::string points = svg.substr(pts, end - pts);
  std::size_t last_space = points.rfind(' ');
  std::string last = points.substr(last_space + 1);
  double x = 0.0, y = 0.0;
  ASSERT_EQ(std::sscanf(last.c_str(), "%lf,%lf", &x, &y), 2);

  // reconstruct the value scale from the run itself (same rule as the plot:
  // data range padded by 5%)
  double lo = 0.0, hi = 3.0;  // x0 spans [0, 3]; the attack stays inside
  double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;
  const double mt = 20.0, mb = 40.0, ph = 540.0 - mt - mb;
  double expected_y = mt + ph * (hi - 3.0) / (hi - lo);
  EXPECT_NEAR(y, expected_y, 1.0);
  EXPECT_NEAR(x, 960.0 - 20.0, 1.0);  // last round sits at the right margin
}

TEST(Plot, EmptyTraceThrows) {
  RunResult r;
  EXPECT_THROW(plot_svg(r), std::invalid_argument);
}

TEST(Plot, DegenerateFlatTraceStillRenders) {
  SimConfig cfg;
  cfg.schedule = TopologySchedule(Topology::complete(3));
  cfg.x0 = {2.0, 2.0, 2.0};
  cfg.seed = 1;
  std::string svg = plot_svg(run(cfg));
  EXPECT_EQ(count_occurrences(svg, "<polyline"), 3u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
}

}  // namespace
}  // namespace repc
