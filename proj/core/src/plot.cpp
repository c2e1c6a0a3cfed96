#include "repc/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace repc {
namespace {

const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728",
                          "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
                          "#bcbd22", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string fmt_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

}  // namespace

std::string plot_svg(const RunResult& r, const PlotOptions& opt) {
  if (r.trace.empty()) throw std::invalid_argument("plot_svg: empty trace");
  const int n = r.n();
  const int rounds = static_cast<int>(r.trace.size());

  double lo = r.bijection.to_raw(r.trace[0][0]);
  double hi = lo;
  for (const auto& row : r.trace) {
    for (double v : row) {
      double raw = r.bijection.to_raw(v);
      lo = std::min(lo, raw);
      hi = std::max(hi, raw);
    }
  }
  if (opt.reference) {
    lo = std::min(lo, *opt.reference);
    hi = std::max(hi, *opt.reference);
  }
  if (hi == lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  const double ml = 60.0, mr = 20.0, mt = opt.title.empty() ? 20.0 : 40.0,
               mb = 40.0;
  const double pw = opt.width - ml - mr;
  const double ph = opt.height - mt - mb;
  auto px = [&](int k) {
    return rounds > 1 ? ml + pw * k / (rounds - 1) : ml + pw / 2;
  };
  auto py = [&](double v) { return mt + ph * (hi - v) / (hi - lo); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         std::to_string(opt.width) + "\" height=\"" +
         std::to_string(opt.height) + "\" viewBox=\"0 0 " +
         std::to_string(opt.width) + " " + std::to_string(opt.height) +
         "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!opt.title.empty())
    svg += "<text x=\"" + fmt(ml) +
           "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">" +
           opt.title + "</text>\n";

  // axes
  svg += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt) + "\" x2=\"" + fmt(ml) +
         "\" y2=\"" + fmt(mt + ph) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + fmt(ml) + "\" y1=\"" + fmt(mt + ph) + "\" x2=\"" +
         fmt(ml + pw) + "\" y2=\"" + fmt(mt + ph) + "\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + fmt(ml - 8) + "\" y=\"" + fmt(py(hi - pad) + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
         fmt_label(hi - pad) + "</text>\n";
  svg += "<text x=\"" + fmt(ml - 8) + "\" y=\"" + fmt(py(lo + pad) + 4) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
         fmt_label(lo + pad) + "</text>\n";
  svg += "<text x=\"" + fmt(ml) + "\" y=\"" + fmt(mt + ph + 16) +
         "\" font-family=\"sans-serif\" font-size=\"11\">0</text>\n";
  svg += "<text x=\"" + fmt(ml + pw) + "\" y=\"" + fmt(mt + ph + 16) +
         "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">" +
         std::to_string(rounds - 1) + "</text>\n";

  if (opt.reference) {
    svg += "<line class=\"reference\" x1=\"" + fmt(ml) + "\" y1=\"" +
           fmt(py(*opt.reference)) + "\" x2=\"" + fmt(ml + pw) + "\" y2=\"" +
           fmt(py(*opt.reference)) +
           "\" stroke=\"#888888\" stroke-dasharray=\"2,4\"/>\n";
  }

  for (int i = 0; i < n; ++i) {
    bool attacked =
        std::binary_search(r.attacked.begin(), r.attacked.end(), i);
    svg += "<polyline class=\"agent";
    if (attacked) svg += " attacked";
    svg += "\" data-agent=\"" + std::to_string(i) + "\" fill=\"none\" stroke=\"";
    svg += kPalette[i % (sizeof kPalette / sizeof kPalette[0])];
    svg += "\" stroke-width=\"1.5\"";
    if (attacked) svg += " stroke-dasharray=\"6,3\"";
    svg += " points=\"";
    for (int k = 0; k < rounds; ++k) {
      if (k) svg += ' ';
      svg += fmt(px(k)) + "," + fmt(py(r.bijection.to_raw(r.trace[k][i])));
    }
    svg += "\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace repc
