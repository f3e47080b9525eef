#pragma once

#include <optional>

#include "dodec/engine.hpp"

namespace dodec {

struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Moving elements cycle through three kinds; a passing locomotive takes a
// different state inside each kind, and the decoration weights below keep
// the track's blank cells on the quiet side of the rule table.
int kind_after(int k);    // 2 -> 3 -> 4 -> 2
St inside_state(int k);   // 2: R, 3: G, 4: B
int kind_weight(int k);   // decoration sum: 2: 6, 3: 8, 4: 11

struct PathCell {
  Word cell;
  int kind = 2;
  int tile = -1;
  bool lower = false;
  std::vector<int> faces;  // stack labels above the tile cell
};

struct Path {
  std::string name;
  std::vector<PathCell> cells;  // in travel order
};

// Fixed G/R cell giving one element its share of the decoration sum.
struct Milestone {
  Word host;
  St state = St::G;
  Word element;
  int depth = 1;  // stack labels between host and the element's tile cell
};

// Switchable blocker: c_cell W lets trains through the controlled element,
// R absorbs them. A signal on the toggle line fires a_cell, which flips
// c_cell one generation later.
struct ControllerMeta {
  Word c_cell;
  Word a_cell;
  Word controlled;
  Word toggle_last;
};

struct Structure {
  std::string name;
  std::vector<Path> paths;
  std::vector<Milestone> milestones;
  std::vector<Word> keep_blank;                      // must stay W in every run
  std::vector<std::pair<Word, Word>> designed_pairs; // permitted contacts
  std::optional<ControllerMeta> controller;
  int flagged_depth = 2;

  Configuration decor() const;
  const Path* path(const std::string& name) const;
  const PathCell* cell_at(const Word& w) const;
  std::vector<const PathCell*> elements() const;  // deduplicated, build order
};

Structure build_track(const Chart& chart, int length, int first_kind,
                      bool reverse = false);
Structure build_scheme_track(const Chart& chart);
Structure build_switch_fixed(const Chart& chart, int variant);
Structure build_fork(const Chart& chart);
Structure build_controller(const Chart& chart);
Structure build_tunnel(const Chart& chart);
Structure build_bypass(const Chart& chart);

const std::vector<std::string>& structure_names();
Structure build_structure(const Chart& chart, const std::string& name);

Configuration with_locomotive(const Structure& s, const std::string& path, int index);
void add_locomotive(const Structure& s, Configuration& c, const std::string& path,
                    int index);

// Cells whose state differs from the decoration; a vanished decoration
// shows up mapped to W.
std::map<Word, St> dynamic_cells(const Configuration& cfg, const Configuration& decor);

// Position-by-position motion oracle, independent of the rule table:
// locomotives advance one element per generation, duplicate where a cell
// has two successors, and obey the controller's block/toggle protocol.
// Entry [g] holds the expected dynamic cells after g generations.
std::vector<std::map<Word, St>> expected_trace(
    const Structure& s, const std::vector<std::pair<std::string, int>>& locos,
    int generations, St c_initial = St::W);

// One line of the compact motion picture: kind digits with the occupied
// cells overprinted by their state letters. Single-path structures only.
std::string frame_string(const Structure& s, const std::map<Word, St>& dynamic);

struct AuditReport {
  bool idle_fixed = false;
  bool isolation_ok = false;
  bool dynamic_ok = false;
  int max_depth = 0;
  std::vector<std::string> notes;

  bool ok() const { return idle_fixed && isolation_ok && dynamic_ok; }
};

// Checks a structure end to end: the empty decoration must be a fixed
// point, every milestone may touch only its own element, and a locomotive
// run down each path must reproduce the motion oracle exactly and leave
// the decoration behind unchanged.
AuditReport audit_structure(const Chart& chart, const Structure& s,
                            const Transitions& tr);

}  // namespace dodec
