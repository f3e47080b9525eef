#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <vector>

#include "dodec/rules.hpp"

namespace dodec {

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A cell whose (state, neighborhood sum) has no rule. Reaching one aborts
// the whole step; the configuration is left untouched so the offender can
// be inspected.
struct RuleMiss {
  Word cell;
  St current = St::W;
  int sum = 0;
};

struct StepReport {
  int changed = 0;
  int max_sum = 0;
  std::vector<RuleMiss> misses;

  bool ok() const { return misses.empty(); }
};

// Sparse assignment of states to cells; blank cells are not stored.
class Configuration {
 public:
  St get(const Word& c) const;
  void set(const Word& c, St s);
  int population() const { return static_cast<int>(cells_.size()); }
  const std::map<Word, St>& cells() const { return cells_; }

  bool operator==(const Configuration&) const = default;

  // One line per populated cell, "<address> <state>", in address order.
  void dump(std::ostream& out, const Chart& chart) const;
  static Configuration load(std::istream& in, const Chart& chart);

 private:
  std::map<Word, St> cells_;
};

// Advances one generation. All updates commit together or, if any cell
// misses, not at all.
StepReport step(Configuration& c, const Transitions& tr);

// Runs up to n generations, stopping early on a miss. The callback (if
// given) sees the configuration after each committed generation.
struct RunReport {
  int generations = 0;  // committed
  StepReport last;
};
RunReport run(Configuration& c, const Transitions& tr, int n,
              const std::function<void(int, const Configuration&)>& after = {});

std::string describe(const RuleMiss& m, const Chart& chart);

}  // namespace dodec
