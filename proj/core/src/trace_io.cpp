#include "repc/trace_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace repc {
namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  out += buf;
}

}  // namespace

std::string states_csv(const RunResult& r) {
  std::string out = "k,agent,x\n";
  const int n = r.n();
  for (int k = 0; k < r.rounds; ++k) {
    for (int i = 0; i < n; ++i) {
      out += std::to_string(k);
      out += ',';
      out += std::to_string(i);
      out += ',';
      append_double(out, r.bijection.to_raw(r.trace[k][i]));
      out += '\n';
    }
  }
  return out;
}

std::string reputations_csv(const RunResult& r) {
  std::string out = "k,agent,neighbor,c\n";
  const int n = r.n();
  for (int k = 0; k < static_cast<int>(r.logs.size()); ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (!r.logs[k].evaluated_at(i, j)) continue;
        out += std::to_string(k);
        out += ',';
        out += std::to_string(i);
        out += ',';
        out += std::to_string(j);
        out += ',';
        append_double(out,
                      r.reputation_trace[k][static_cast<std::size_t>(i) * n + j]);
        out += '\n';
      }
    }
  }
  return out;
}

std::string sweep_csv(const SweepResult& s) {
  std::string out = "mu,sigma,mean_abs_error,std_error,repeats\n";
  for (const auto& c : s.cells) {
    append_double(out, c.mu);
    out += ',';
    append_double(out, c.sigma);
    out += ',';
    append_double(out, c.mean_abs_error);
    out += ',';
    append_double(out, c.std_error);
    out += ',';
    out += std::to_string(c.repeats);
    out += '\n';
  }
  return out;
}

std::vector<std::tuple<int, int, double>> parse_states_csv(
    const std::string& text) {
  std::vector<std::tuple<int, int, double>> rows;
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != "k,agent,x")
    throw std::invalid_argument("bad states csv header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    int k = 0;
    int agent = 0;
    double x = 0.0;
    if (std::sscanf(line.c_str(), "%d,%d,%lf", &k, &agent, &x) != 3)
      throw std::invalid_argument("bad states csv row: " + line);
    rows.emplace_back(k, agent, x);
  }
  return rows;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw std::runtime_error("short write to " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace repc
