#include "dodec/rules.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace dodec {

int Rule::sum() const {
  int s = 0;
  for (St x : nbhd) s += weight(x);
  return s;
}

std::string Rule::text() const {
  std::string s = std::to_string(number);
  s += ' ';
  s += state_char(current);
  s += '.';
  for (St x : nbhd) s += state_char(x);
  s += '.';
  s += state_char(next);
  s += ' ';
  s += std::to_string(checksum);
  return s;
}

RuleTable RuleTable::parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RuleError("cannot open rule file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

RuleTable RuleTable::parse_text(const std::string& text, const std::string& origin) {
  RuleTable t;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw RuleError(origin + ":" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos || line[a] == '#') continue;
    std::istringstream ls(line);
    Rule r;
    std::string body;
    if (!(ls >> r.number >> body >> r.checksum)) fail("expected '<number> <rule> <checksum>'");
    std::string trail;
    if (ls >> trail) fail("trailing text '" + trail + "'");
    size_t d1 = body.find('.');
    size_t d2 = body.rfind('.');
    if (d1 == std::string::npos || d2 == d1) fail("rule body needs two dots");
    if (d1 != 1 || d2 + 2 != body.size()) fail("malformed rule body '" + body + "'");
    auto st = [&](char c) {
      auto s = state_from_char(c);
      if (!s) fail(std::string("unknown state '") + c + "'");
      return *s;
    };
    r.current = st(body[0]);
    r.next = st(body[d2 + 1]);
    for (size_t i = d1 + 1; i < d2; ++i) r.nbhd.push_back(st(body[i]));
    if (r.nbhd.size() > 12) fail("neighborhood longer than 12");
    if (r.sum() != r.checksum)
      fail("checksum " + std::to_string(r.checksum) + " but neighborhood sums to " +
           std::to_string(r.sum()));
    for (const Rule& prev : t.rules_)
      if (prev.number == r.number) fail("duplicate rule number " + std::to_string(r.number));
    t.rules_.push_back(std::move(r));
  }
  t.projection();  // rejects contradictory tables
  return t;
}

const Rule* RuleTable::find(int number) const {
  for (const Rule& r : rules_)
    if (r.number == number) return &r;
  return nullptr;
}

std::vector<RuleConflict> RuleTable::conflicts() const {
  std::vector<RuleConflict> out;
  for (size_t i = 0; i < rules_.size(); ++i)
    for (size_t j = i + 1; j < rules_.size(); ++j) {
      const Rule &a = rules_[i], &b = rules_[j];
      if (a.current == b.current && a.checksum == b.checksum && a.next != b.next)
        out.push_back({a.number, b.number});
    }
  return out;
}

std::vector<TotalWitness> RuleTable::total_witnesses() const {
  std::vector<TotalWitness> out;
  for (size_t i = 0; i < rules_.size(); ++i)
    for (size_t j = i + 1; j < rules_.size(); ++j) {
      const Rule &a = rules_[i], &b = rules_[j];
      if (a.total() == b.total() && a.next != b.next)
        out.push_back({a.total(), std::min(a.number, b.number), std::max(a.number, b.number)});
    }
  std::sort(out.begin(), out.end(), [](const TotalWitness& x, const TotalWitness& y) {
    return std::tie(x.total, x.a, x.b) < std::tie(y.total, y.a, y.b);
  });
  return out;
}

std::map<std::pair<St, int>, int> RuleTable::projection() const {
  std::map<std::pair<St, int>, int> proj;
  for (const Rule& r : rules_) {
    auto key = std::make_pair(r.current, r.checksum);
    auto it = proj.find(key);
    if (it == proj.end()) {
      proj.emplace(key, r.number);
    } else if (find(it->second)->next != r.next) {
      throw RuleError("rules " + std::to_string(it->second) + " and " +
                      std::to_string(r.number) + " disagree on (" + state_char(r.current) + "," +
                      std::to_string(r.checksum) + ")");
    }
  }
  return proj;
}

RuleTable RuleTable::modified(int number, St next) const {
  RuleTable t = *this;
  for (Rule& r : t.rules_)
    if (r.number == number) {
      r.next = next;
      return t;
    }
  throw RuleError("no rule numbered " + std::to_string(number));
}

void RuleTable::append(const RuleTable& extra) {
  for (const Rule& r : extra.rules_) {
    if (find(r.number)) throw RuleError("duplicate rule number " + std::to_string(r.number));
    rules_.push_back(r);
  }
  projection();
}

Transitions::Transitions(const RuleTable& table) {
  for (int s = 0; s < 4; ++s)
    for (int k = 0; k <= kMaxSum; ++k) {
      number_[s][k] = 0;
      next_[s][k] = -1;
    }
  for (const auto& [key, number] : table.projection()) {
    number_[int(key.first)][key.second] = number;
    next_[int(key.first)][key.second] = int(table.find(number)->next);
  }
}

std::optional<St> Transitions::next(St current, int sum) const {
  if (sum < 0 || sum > kMaxSum) return std::nullopt;
  int n = next_[int(current)][sum];
  if (n < 0) return std::nullopt;
  return St(n);
}

int Transitions::rule_number(St current, int sum) const {
  if (sum < 0 || sum > kMaxSum) return 0;
  return number_[int(current)][sum];
}

}  // namespace dodec
