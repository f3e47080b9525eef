#include "dodec/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dodec {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  std::string t;
  while (in >> t) out.push_back(t);
  return out;
}

int parse_int(const std::string& s, int ln) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ScenarioError("line " + std::to_string(ln) + ": bad number '" + s +
                        "'");
  }
}

void union_into(const Chart& chart, Configuration& dst,
                const Configuration& src) {
  for (const auto& [w, s] : src.cells()) {
    St have = dst.get(w);
    if (have != St::W && have != s)
      throw ScenarioError("cell " + chart.name(w) + " assigned both " +
                          std::string(1, state_char(have)) + " and " +
                          std::string(1, state_char(s)));
    dst.set(w, s);
  }
}

}  // namespace

Scenario Scenario::parse(std::istream& in) {
  Scenario sc;
  bool have_gen = false;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    auto tok = tokens_of(line);
    if (tok.empty()) continue;
    auto want = [&](std::size_t n) {
      if (tok.size() != n + 1)
        throw ScenarioError("line " + std::to_string(ln) + ": '" + tok[0] +
                            "' takes " + std::to_string(n) + " argument(s)");
    };
    if (tok[0] == "scenario") {
      want(1);
      sc.name = tok[1];
    } else if (tok[0] == "structure") {
      want(1);
      sc.structures.push_back(tok[1]);
    } else if (tok[0] == "loco") {
      want(2);
      if (sc.structures.empty())
        throw ScenarioError("line " + std::to_string(ln) +
                            ": loco before any structure");
      sc.locos.push_back({static_cast<int>(sc.structures.size()) - 1, tok[1],
                          parse_int(tok[2], ln)});
    } else if (tok[0] == "cell") {
      want(2);
      auto s = tok[2].size() == 1 ? state_from_char(tok[2][0]) : std::nullopt;
      if (!s)
        throw ScenarioError("line " + std::to_string(ln) + ": bad state '" +
                            tok[2] + "'");
      sc.cells.emplace_back(tok[1], *s);
    } else if (tok[0] == "trace") {
      want(1);
      sc.traced.push_back(tok[1]);
    } else if (tok[0] == "generations") {
      want(1);
      sc.generations = parse_int(tok[1], ln);
      if (sc.generations < 0)
        throw ScenarioError("line " + std::to_string(ln) +
                            ": negative generation count");
      have_gen = true;
    } else {
      throw ScenarioError("line " + std::to_string(ln) +
                          ": unknown directive '" + tok[0] + "'");
    }
  }
  if (sc.name.empty()) throw ScenarioError("scenario has no name");
  if (!have_gen)
    throw ScenarioError("scenario '" + sc.name + "' has no generation count");
  return sc;
}

Scenario Scenario::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file " + path);
  Scenario sc = parse(in);
  return sc;
}

Configuration compose(const Chart& chart, const Scenario& sc,
                      std::vector<Structure>* built) {
  std::vector<Structure> local;
  std::vector<Structure>& st = built ? *built : local;
  st.clear();
  for (const auto& n : sc.structures) st.push_back(build_structure(chart, n));
  Configuration cfg;
  for (const auto& s : st) union_into(chart, cfg, s.decor());
  for (const auto& lp : sc.locos) {
    Configuration one;
    add_locomotive(st.at(lp.structure), one, lp.path, lp.index);
    union_into(chart, cfg, one);
  }
  for (const auto& [addr, s] : sc.cells) {
    Word w = chart.parse(addr);
    St have = cfg.get(w);
    if (have != St::W && have != s)
      throw ScenarioError("cell " + addr + " assigned both " +
                          std::string(1, state_char(have)) + " and " +
                          std::string(1, state_char(s)));
    cfg.set(w, s);
  }
  return cfg;
}

ScenarioRun run_scenario(const Chart& chart, const Scenario& sc,
                         const Transitions& tr) {
  register_window_names(chart);
  ScenarioRun out;
  Configuration cfg = compose(chart, sc);
  out.frames.push_back(cfg);
  for (int g = 0; g < sc.generations; ++g) {
    StepReport rep = step(cfg, tr);
    out.max_sum = std::max(out.max_sum, rep.max_sum);
    if (!rep.ok()) {
      out.misses = rep.misses;
      break;
    }
    out.frames.push_back(cfg);
  }
  return out;
}

std::string trace_line(const Chart& chart, const Scenario& sc, int gen,
                       const Configuration& cfg) {
  std::ostringstream out;
  out << gen;
  if (sc.traced.empty()) {
    std::vector<std::pair<std::string, St>> rows;
    for (const auto& [w, s] : cfg.cells()) rows.emplace_back(chart.name(w), s);
    std::sort(rows.begin(), rows.end());
    for (const auto& [a, s] : rows) out << ' ' << a << '=' << state_char(s);
  } else {
    for (const auto& addr : sc.traced)
      out << ' ' << addr << '=' << state_char(cfg.get(chart.parse(addr)));
  }
  return out.str();
}

std::string write_trace(const Chart& chart, const Scenario& sc,
                        const ScenarioRun& run) {
  std::string out;
  for (std::size_t g = 0; g < run.frames.size(); ++g) {
    out += trace_line(chart, sc, static_cast<int>(g), run.frames[g]);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> trace_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
      line.pop_back();
    out.push_back(line);
  }
  return out;
}

}  // namespace

int compare_trace(const std::string& got, const std::string& want) {
  auto a = trace_lines(got);
  auto b = trace_lines(want);
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= a.size() || i >= b.size() || a[i] != b[i])
      return static_cast<int>(i);
  }
  return -1;
}

void register_window_names(const Chart& chart) {
  const Pentagrid& g = chart.grid();
  for (int t = 0; t < g.tile_count(); ++t) {
    if (g.tile(t).level < 0 || g.tile(t).level > g.max_level()) continue;
    chart.register_name(chart.cell(t, false), chart.tile_name(t));
    chart.register_name(chart.cell(t, true), "b:" + chart.tile_name(t));
  }
}

}  // namespace dodec
