#pragma once

#include <iosfwd>

#include "dodec/builders.hpp"

// Named experiment setups: which structures to build, where to put
// locomotives, how long to run, and what to report. Scenario files are
// plain text, one directive per line, '#' starting a comment:
//
//   scenario <name>
//   structure <structure-name>     # may repeat; decorations are unioned
//   loco <path> <index>            # on the most recent structure
//   cell <address> <state>         # extra cell, e.g. a controller set to R
//   trace <address>                # report only these cells (default: all)
//   generations <n>
//
// A trace has one line per generation: the generation number followed by
// "<address>=<state>" entries, sorted by address (or in trace-directive
// order when given). Traces written from the same scenario are
// byte-identical run to run and serve as the regression goldens.

namespace dodec {

struct ScenarioError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LocoPlacement {
  int structure = 0;  // index into Scenario::structures
  std::string path;
  int index = 0;
};

struct Scenario {
  std::string name;
  std::vector<std::string> structures;
  std::vector<LocoPlacement> locos;
  std::vector<std::pair<std::string, St>> cells;
  std::vector<std::string> traced;
  int generations = 0;

  static Scenario parse(std::istream& in);
  static Scenario load(const std::string& path);
};

// Builds every structure and unions decorations, locomotives and extra
// cells. Two sources writing different states to one cell is an error.
Configuration compose(const Chart& chart, const Scenario& sc,
                      std::vector<Structure>* built = nullptr);

struct ScenarioRun {
  std::vector<Configuration> frames;  // frames[g] after g generations
  int max_sum = 0;                    // over all generations
  std::vector<RuleMiss> misses;       // non-empty if the run aborted

  bool ok() const { return misses.empty(); }
};

ScenarioRun run_scenario(const Chart& chart, const Scenario& sc,
                         const Transitions& tr);

std::string trace_line(const Chart& chart, const Scenario& sc, int gen,
                       const Configuration& cfg);
std::string write_trace(const Chart& chart, const Scenario& sc,
                        const ScenarioRun& run);

// First generation whose trace lines differ, or -1 when equal. A missing
// line counts as a divergence at its generation number.
int compare_trace(const std::string& got, const std::string& want);

// Registers "<tile>" / "b:<tile>" names for every tile cell of the chart,
// so dumps and traces print structured addresses for cells the builders
// never touched.
void register_window_names(const Chart& chart);

}  // namespace dodec
