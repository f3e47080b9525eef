#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dodec/geometry.hpp"

namespace dodec {

struct RuleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One line of the rule table. The neighborhood is stored as written,
// trailing blanks omitted; sum() recomputes the checksum.
struct Rule {
  int number = 0;
  St current = St::W;
  std::vector<St> nbhd;
  St next = St::W;
  int checksum = 0;

  int sum() const;
  int total() const { return weight(current) + checksum; }
  std::string text() const;
};

// Two rules with the same (current state, neighborhood sum) but different
// outcomes; a loaded table has none.
struct RuleConflict {
  int a = 0, b = 0;
};

// Two rules with the same total weight (current cell included) but
// different outcomes. These certify that the cell's own state cannot be
// folded into the sum.
struct TotalWitness {
  int total = 0;
  int a = 0, b = 0;
};

class RuleTable {
 public:
  static RuleTable parse_file(const std::string& path);
  static RuleTable parse_text(const std::string& text, const std::string& origin = "<text>");

  const std::vector<Rule>& rules() const { return rules_; }
  const Rule* find(int number) const;

  std::vector<RuleConflict> conflicts() const;
  std::vector<TotalWitness> total_witnesses() const;

  // (current, sum) -> rule number; throws if the table conflicts.
  std::map<std::pair<St, int>, int> projection() const;

  // Copy with one rule's outcome replaced, for what-if audits.
  RuleTable modified(int number, St next) const;

  // Extends this table (numbers must stay unique).
  void append(const RuleTable& extra);

 private:
  std::vector<Rule> rules_;
};

// Fast (current, sum) lookup for the engine.
class Transitions {
 public:
  explicit Transitions(const RuleTable& table);

  std::optional<St> next(St current, int sum) const;
  int rule_number(St current, int sum) const;  // 0 when no rule applies

  static constexpr int kMaxSum = 36;  // 12 neighbors, heaviest state 3

 private:
  int number_[4][kMaxSum + 1];
  int next_[4][kMaxSum + 1];  // -1 when no rule applies
};

}  // namespace dodec
