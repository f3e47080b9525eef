#include "dodec/engine.hpp"

#include <ostream>
#include <set>
#include <sstream>

namespace dodec {

St Configuration::get(const Word& c) const {
  auto it = cells_.find(c);
  return it == cells_.end() ? St::W : it->second;
}

void Configuration::set(const Word& c, St s) {
  if (s == St::W)
    cells_.erase(c);
  else
    cells_[c] = s;
}

void Configuration::dump(std::ostream& out, const Chart& chart) const {
  std::map<std::string, char> lines;
  for (const auto& [cell, st] : cells_) lines[chart.name(cell)] = state_char(st);
  for (const auto& [name, ch] : lines) out << name << ' ' << ch << '\n';
}

Configuration Configuration::load(std::istream& in, const Chart& chart) {
  Configuration c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    std::istringstream ls(line);
    std::string addr, st;
    if (!(ls >> addr >> st) || st.size() != 1)
      throw EngineError("line " + std::to_string(lineno) + ": expected '<address> <state>'");
    auto s = state_from_char(st[0]);
    if (!s) throw EngineError("line " + std::to_string(lineno) + ": unknown state " + st);
    c.set(chart.parse(addr), *s);
  }
  return c;
}

StepReport step(Configuration& c, const Transitions& tr) {
  StepReport rep;
  std::set<Word> frontier;
  for (const auto& [cell, st] : c.cells()) {
    (void)st;
    frontier.insert(cell);
    for (const Word& n : cell_neighbors(cell)) frontier.insert(n);
  }
  std::vector<std::pair<Word, St>> changes;
  for (const Word& cell : frontier) {
    int sum = 0;
    for (const Word& n : cell_neighbors(cell)) sum += weight(c.get(n));
    if (sum > rep.max_sum) rep.max_sum = sum;
    St cur = c.get(cell);
    auto next = tr.next(cur, sum);
    if (!next) {
      rep.misses.push_back({cell, cur, sum});
      continue;
    }
    if (*next != cur) changes.emplace_back(cell, *next);
  }
  if (!rep.misses.empty()) return rep;
  for (const auto& [cell, st] : changes) c.set(cell, st);
  rep.changed = static_cast<int>(changes.size());
  return rep;
}

RunReport run(Configuration& c, const Transitions& tr, int n,
              const std::function<void(int, const Configuration&)>& after) {
  RunReport rep;
  for (int g = 1; g <= n; ++g) {
    rep.last = step(c, tr);
    if (!rep.last.ok()) break;
    rep.generations = g;
    if (after) after(g, c);
  }
  return rep;
}

std::string describe(const RuleMiss& m, const Chart& chart) {
  std::ostringstream s;
  s << "no rule for state " << state_char(m.current) << " with neighborhood sum " << m.sum
    << " at " << chart.name(m.cell);
  return s.str();
}

}  // namespace dodec
