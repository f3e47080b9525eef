#include "dodec/builders.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace dodec {

int kind_after(int k) {
  switch (k) {
    case 2: return 3;
    case 3: return 4;
    case 4: return 2;
  }
  throw BuildError("element kind must be 2, 3 or 4");
}

St inside_state(int k) {
  switch (k) {
    case 2: return St::R;
    case 3: return St::G;
    case 4: return St::B;
  }
  throw BuildError("element kind must be 2, 3 or 4");
}

int kind_weight(int k) {
  switch (k) {
    case 2: return 6;
    case 3: return 8;
    case 4: return 11;
  }
  throw BuildError("element kind must be 2, 3 or 4");
}

Configuration Structure::decor() const {
  Configuration cfg;
  for (const auto& m : milestones) cfg.set(m.host, m.state);
  return cfg;
}

const Path* Structure::path(const std::string& n) const {
  for (const auto& p : paths)
    if (p.name == n) return &p;
  return nullptr;
}

const PathCell* Structure::cell_at(const Word& w) const {
  for (const auto& p : paths)
    for (const auto& c : p.cells)
      if (c.cell == w) return &c;
  return nullptr;
}

std::vector<const PathCell*> Structure::elements() const {
  std::vector<const PathCell*> out;
  std::set<Word> seen;
  for (const auto& p : paths)
    for (const auto& c : p.cells)
      if (seen.insert(c.cell).second) out.push_back(&c);
  return out;
}

namespace {

// Sums a blank spectator cell can carry without waking up or wedging:
// every value a rule maps back to W. The gaps are the element entry sums
// (7, 10, 14), the switch flip sums (17, 19), and the holes (4, 21+).
bool quiet_w_sum(int s) {
  if (s < 0 || s > 20) return false;
  return s != 4 && s != 7 && s != 10 && s != 14 && s != 17 && s != 19;
}

struct Builder {
  const Chart& ch;
  Structure st;

  Builder(const Chart& c, std::string name) : ch(c) { st.name = std::move(name); }

  int tid(int sector, int index) const {
    if (sector == 0) return 0;
    int t = ch.grid().find(sector, index);
    if (t < 0) {
      std::ostringstream os;
      os << "tile (" << sector << ")-" << index << " is outside the chart";
      throw BuildError(os.str());
    }
    return t;
  }

  PathCell tile_cell(int tile, int kind, bool lower = false) const {
    if (tile < 0) throw BuildError("track runs off the constructed chart");
    Word w = ch.cell(tile, lower);
    ch.register_name(w, ch.address_text(tile, lower, {}));
    return PathCell{w, kind, tile, lower, {}};
  }

  PathCell cellp(int sector, int index, int kind, bool lower = false) const {
    return tile_cell(tid(sector, index), kind, lower);
  }

  PathCell stackp(int sector, int index, bool lower, std::vector<int> faces,
                  int kind) const {
    int tile = tid(sector, index);
    Word w = ch.stack(tile, lower, faces);
    ch.register_name(w, ch.address_text(tile, lower, faces));
    return PathCell{w, kind, tile, lower, std::move(faces)};
  }

  void add_path(std::string name, std::vector<PathCell> cells) {
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      if (cells[i + 1].kind != kind_after(cells[i].kind))
        throw BuildError("path " + name + " breaks the element cycle at " +
                         ch.name(cells[i + 1].cell));
      if (!cells_adjacent(cells[i].cell, cells[i + 1].cell))
        throw BuildError("path " + name + " jumps between " +
                         ch.name(cells[i].cell) + " and " +
                         ch.name(cells[i + 1].cell));
    }
    st.paths.push_back(Path{std::move(name), std::move(cells)});
  }

  void milestone(const Word& host, St state, const Word& element, int depth) {
    st.milestones.push_back(Milestone{host, state, element, depth});
  }

  // ----- milestone placement ---------------------------------------------

  std::set<Word> path_cells() const {
    std::set<Word> out;
    for (const auto& p : st.paths)
      for (const auto& c : p.cells) out.insert(c.cell);
    return out;
  }

  bool designed(const Word& a, const Word& b) const {
    for (const auto& pr : st.designed_pairs)
      if ((a == pr.first && b == pr.second) ||
          (a == pr.second && b == pr.first))
        return true;
    return false;
  }

  struct Candidate {
    Word host;
    std::string label;  // registered on use; empty means unnamed
  };

  std::vector<Candidate> candidates_for(const PathCell& e) const {
    std::vector<Candidate> out;
    if (e.faces.empty()) {
      // A base cell parks its milestones on the corner stacks, preferring
      // the corners away from the track, then falls back on the other
      // neighbors one step out: the cell on its far side and the base
      // cells of free tiles around it.
      std::set<Word> seen;
      for (int f : {7, 8, 10, 9, 6, 11}) {
        Word w = ch.stack(e.tile, e.lower, {f});
        seen.insert(w);
        out.push_back({std::move(w), ch.address_text(e.tile, e.lower, {f})});
      }
      Word base = ch.cell(e.tile, e.lower);
      std::vector<Word> rest;
      for (const Word& n : cell_neighbors(base))
        if (n.size() > base.size() && !seen.count(n)) rest.push_back(n);
      std::sort(rest.begin(), rest.end());
      for (Word& w : rest) {
        std::string label;
        if (!e.lower && w == ch.cell(e.tile, true))
          label = ch.address_text(e.tile, true, {});
        out.push_back({std::move(w), std::move(label)});
      }
      return out;
    }
    std::vector<std::pair<Word, int>> deeper;
    for (int g = 0; g < 12; ++g) {
      Word n = mul(e.cell, g);
      if (n.size() <= e.cell.size()) continue;
      int label = -1;
      for (int f = 0; f < 12; ++f)
        if (ch.rho(e.tile, f) == g) {
          label = f;
          break;
        }
      deeper.emplace_back(std::move(n), label);
    }
    std::sort(deeper.begin(), deeper.end());
    for (auto& [w, label] : deeper) {
      std::string text;
      if (label >= 0) {
        std::vector<int> faces = e.faces;
        faces.push_back(label);
        text = ch.address_text(e.tile, e.lower, faces);
      }
      out.push_back({std::move(w), std::move(text)});
    }
    return out;
  }

  // A candidate host may not push any blank neighbor (reserved cells
  // included) onto a waking or missing sum, under any single passing
  // train and any switch phase the neighbor can see.
  bool spectators_quiet(const Word& h, St hs,
                        const std::set<Word>& paths) const {
    for (const Word& x : cell_neighbors(h)) {
      if (paths.count(x)) continue;
      if (st.controller &&
          (x == st.controller->c_cell || x == st.controller->a_cell))
        continue;
      bool is_host = false;
      for (const auto& m : st.milestones)
        if (m.host == x) is_host = true;
      if (is_host) continue;
      int idle = weight(hs);
      for (const auto& m : st.milestones)
        if (cells_adjacent(x, m.host)) idle += weight(m.state);
      std::vector<int> carriers{0};
      for (const auto& p : st.paths)
        for (const auto& c : p.cells)
          if (cells_adjacent(x, c.cell))
            carriers.push_back(weight(inside_state(c.kind)));
      bool near_c = st.controller && cells_adjacent(x, st.controller->c_cell);
      bool near_a = st.controller && cells_adjacent(x, st.controller->a_cell);
      for (int w : carriers)
        for (int dc : {0, near_c ? 2 : 0})
          for (int da : {0, near_a ? 2 : 0})
            if (!quiet_w_sum(idle + w + dc + da)) return false;
    }
    return true;
  }

  void place_milestones() {
    std::set<Word> paths = path_cells();
    std::set<Word> occupied = paths;
    for (const auto& w : st.keep_blank) occupied.insert(w);
    for (const auto& m : st.milestones) occupied.insert(m.host);
    if (st.controller) {
      occupied.insert(st.controller->c_cell);
      occupied.insert(st.controller->a_cell);
    }
    // Returns an empty string when the host is usable, else the veto reason.
    auto host_veto = [&](const Word& h, St hs,
                         const Word& element) -> std::string {
      if (occupied.count(h)) return "occupied";
      for (const auto& p : paths)
        if (p != element && cells_adjacent(h, p)) return "touches a track cell";
      if (st.controller)
        for (Word w : {st.controller->c_cell, st.controller->a_cell})
          if (cells_adjacent(h, w)) return "touches a switch cell";
      for (const auto& m : st.milestones)
        if (cells_adjacent(h, m.host) && !designed(h, m.host))
          return "touches the milestone at " + ch.name(m.host);
      if (!spectators_quiet(h, hs, paths)) return "wakes a spectator";
      return "";
    };
    // Heavier elements choose first: a kind-4 cell needs four of its six
    // stacks and is easily starved by a neighbor that placed earlier.
    std::vector<const PathCell*> order = st.elements();
    std::stable_sort(order.begin(), order.end(),
                     [](const PathCell* a, const PathCell* b) {
                       return a->kind > b->kind;
                     });
    // Corner stacks of on-axis cells are the scarce resource: each such
    // cell must seat all its milestones on that one ring. Everyone else
    // steers clear of foreign rings when an equivalent host exists.
    std::set<Word> rings;
    for (const PathCell* e : order)
      if (e->faces.empty())
        for (int f = 6; f <= 11; ++f)
          rings.insert(ch.stack(e->tile, e->lower, {f}));
    for (const PathCell* e : order) {
      int g_needed = e->kind == 4 ? 3 : 2;
      int r_needed = e->kind == 2 ? 0 : 1;
      auto cands = candidates_for(*e);
      std::set<Word> own;
      if (e->faces.empty())
        for (int f = 6; f <= 11; ++f)
          own.insert(ch.stack(e->tile, e->lower, {f}));
      auto mid = std::stable_partition(
          cands.begin(), cands.end(), [&](const Candidate& c) {
            for (const Word& s : rings)
              if (!own.count(s) && s != c.host && s != e->cell &&
                  cells_adjacent(c.host, s))
                return false;
            return true;
          });
      std::size_t tier1 = static_cast<std::size_t>(mid - cands.begin());
      int base_len = static_cast<int>(ch.cell(e->tile, e->lower).size());
      std::size_t mark = st.milestones.size();
      auto place_one = [&](St s, Candidate& c) {
        milestone(c.host, s, e->cell,
                  static_cast<int>(c.host.size()) - base_len);
        occupied.insert(c.host);
        if (!c.label.empty()) ch.register_name(c.host, c.label);
      };
      auto rollback = [&] {
        while (st.milestones.size() > mark) {
          occupied.erase(st.milestones.back().host);
          st.milestones.pop_back();
        }
      };
      auto fill_g = [&](std::size_t skip) {
        int placed = 0;
        for (std::size_t i = 0; i < cands.size() && placed < g_needed; ++i) {
          if (i == skip) continue;
          if (host_veto(cands[i].host, St::G, e->cell).empty()) {
            place_one(St::G, cands[i]);
            ++placed;
          }
        }
        return placed == g_needed;
      };
      bool done = false;
      if (r_needed == 0) {
        done = fill_g(cands.size());
        if (!done) rollback();
      } else {
        // The red marker is choosier than the greens (a wedge it shares
        // with a kind-2 cell lands on the missing sum), so it gets last
        // pick within each tier and the greens keep the preferred corners.
        // Retry with the red elsewhere whenever the greens cannot close
        // around it.
        std::vector<std::size_t> red_order;
        for (std::size_t i = tier1; i-- > 0;) red_order.push_back(i);
        for (std::size_t i = cands.size(); i-- > tier1;) red_order.push_back(i);
        for (std::size_t i : red_order) {
          if (done) break;
          if (!host_veto(cands[i].host, St::R, e->cell).empty()) continue;
          place_one(St::R, cands[i]);
          if (fill_g(i))
            done = true;
          else
            rollback();
        }
      }
      if (!done) {
        std::string vetoes;
        for (auto& c : cands) {
          std::string wg = host_veto(c.host, St::G, e->cell);
          std::string wr = host_veto(c.host, St::R, e->cell);
          vetoes += " " + ch.name(c.host) + ": ";
          if (wg == wr)
            vetoes += wg.empty() ? "usable" : wg;
          else
            vetoes += "green " + (wg.empty() ? "fine" : wg) + ", red " +
                      (wr.empty() ? "fine" : wr);
          vetoes += ";";
        }
        throw BuildError("no room for a milestone of " + ch.name(e->cell) +
                         ";" + vetoes);
      }
    }
  }

  void validate() const {
    std::map<Word, int> kinds;
    for (const auto& p : st.paths)
      for (const auto& c : p.cells) {
        auto [it, fresh] = kinds.emplace(c.cell, c.kind);
        if (!fresh && it->second != c.kind)
          throw BuildError("cell " + ch.name(c.cell) +
                           " carries two different kinds");
      }
    std::set<std::pair<Word, Word>> consec;
    auto norm = [](Word a, Word b) {
      return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
    };
    for (const auto& p : st.paths)
      for (std::size_t i = 0; i + 1 < p.cells.size(); ++i)
        consec.insert(norm(p.cells[i].cell, p.cells[i + 1].cell));
    std::vector<Word> cells;
    for (const auto& [w, k] : kinds) cells.push_back(w);
    for (std::size_t i = 0; i < cells.size(); ++i)
      for (std::size_t j = i + 1; j < cells.size(); ++j)
        if (cells_adjacent(cells[i], cells[j]) &&
            !consec.count(norm(cells[i], cells[j])))
          throw BuildError("elements " + ch.name(cells[i]) + " and " +
                           ch.name(cells[j]) + " touch without being linked");
    for (const auto& w : st.keep_blank)
      if (kinds.count(w))
        throw BuildError("reserved blank cell " + ch.name(w) +
                         " lies on a path");
    for (const auto& m : st.milestones)
      if (!cells_adjacent(m.host, m.element))
        throw BuildError("milestone " + ch.name(m.host) +
                         " does not touch its element");
  }

  Structure finish() {
    validate();
    place_milestones();
    return std::move(st);
  }
};

}  // namespace

Structure build_track(const Chart& ch, int length, int first_kind,
                      bool reverse) {
  if (length < 2) throw BuildError("a track needs at least two elements");
  Builder b(ch, (reverse ? "return" : "track") + std::to_string(length));
  auto ids = ch.grid().row(0, 1, length / 2);
  ids.resize(length);
  if (reverse) std::reverse(ids.begin(), ids.end());
  std::vector<PathCell> cells;
  int k = first_kind;
  for (int id : ids) {
    cells.push_back(b.tile_cell(id, k));
    k = kind_after(k);
  }
  b.add_path("main", std::move(cells));
  return b.finish();
}

Structure build_scheme_track(const Chart& ch) {
  Structure s = build_track(ch, 8, 3);
  s.name = "scheme8";
  return s;
}

Structure build_switch_fixed(const Chart& ch, int variant) {
  if (variant < 1 || variant > 3)
    throw BuildError("fixed switches come in variants 1, 2 and 3");
  Builder b(ch, "switch" + std::to_string(variant));
  if (variant == 1) {
    b.add_path("left", {b.cellp(1, 33, 3), b.cellp(1, 12, 4), b.cellp(1, 4, 2),
                        b.cellp(1, 1, 3), b.cellp(0, 0, 4), b.cellp(3, 1, 2),
                        b.cellp(3, 3, 3), b.cellp(3, 8, 4), b.cellp(3, 21, 2)});
    b.add_path("right", {b.cellp(5, 21, 3), b.cellp(5, 8, 4), b.cellp(5, 3, 2),
                         b.cellp(5, 1, 3), b.cellp(0, 0, 4), b.cellp(3, 1, 2),
                         b.cellp(3, 3, 3), b.cellp(3, 8, 4),
                         b.cellp(3, 21, 2)});
    return b.finish();
  }
  // Variants 2 and 3 bring the joining branch in over the corner stacks;
  // variant 3 climbs one sheet higher and crosses two corners.
  std::vector<PathCell> left{b.cellp(1, 33, 3), b.cellp(1, 12, 4),
                             b.cellp(1, 4, 2),  b.cellp(1, 1, 3),
                             b.cellp(0, 0, 4),  b.cellp(2, 1, 2),
                             b.cellp(2, 4, 3),  b.cellp(2, 12, 4),
                             b.cellp(2, 33, 2)};
  if (variant == 2) {
    b.add_path("right",
               {b.cellp(4, 21, 2), b.cellp(4, 8, 3), b.cellp(4, 3, 4),
                b.stackp(4, 3, false, {7}, 2), b.stackp(4, 7, false, {6}, 3),
                b.stackp(4, 2, false, {7}, 4), b.cellp(4, 2, 2),
                b.cellp(3, 1, 3), b.cellp(0, 0, 4), b.cellp(2, 1, 2),
                b.cellp(2, 4, 3), b.cellp(2, 12, 4), b.cellp(2, 33, 2)});
  } else {
    b.st.flagged_depth = 3;
    b.add_path("right",
               {b.cellp(4, 21, 4), b.cellp(4, 8, 2), b.cellp(4, 3, 3),
                b.stackp(4, 3, false, {7}, 4), b.stackp(4, 7, false, {6}, 2),
                b.stackp(4, 2, false, {7}, 3), b.cellp(4, 2, 4),
                b.stackp(4, 2, false, {6}, 2), b.stackp(3, 1, false, {6}, 3),
                b.stackp(3, 1, false, {6, 7}, 4), b.stackp(3, 1, false, {7}, 2),
                b.stackp(0, 0, false, {7}, 3), b.cellp(0, 0, 4),
                b.cellp(2, 1, 2), b.cellp(2, 4, 3), b.cellp(2, 12, 4),
                b.cellp(2, 33, 2)});
  }
  b.add_path("left", std::move(left));
  return b.finish();
}

Structure build_fork(const Chart& ch) {
  Builder b(ch, "fork");
  std::vector<PathCell> stem{b.cellp(3, 21, 4), b.cellp(3, 8, 2),
                             b.cellp(3, 3, 3), b.cellp(3, 1, 4),
                             b.cellp(0, 0, 2)};
  std::vector<PathCell> left = stem;
  left.insert(left.end(), {b.cellp(1, 1, 3), b.cellp(1, 4, 4),
                           b.cellp(1, 12, 2), b.cellp(1, 33, 3)});
  std::vector<PathCell> right = std::move(stem);
  right.insert(right.end(), {b.cellp(5, 1, 3), b.cellp(5, 3, 4),
                             b.cellp(5, 8, 2), b.cellp(5, 21, 3)});
  b.add_path("left", std::move(left));
  b.add_path("right", std::move(right));
  return b.finish();
}

Structure build_controller(const Chart& ch) {
  Builder b(ch, "controller");
  b.add_path("main", {b.cellp(1, 33, 3), b.cellp(1, 12, 4), b.cellp(1, 4, 2),
                      b.cellp(1, 1, 3), b.cellp(0, 0, 4), b.cellp(3, 1, 2),
                      b.cellp(3, 3, 3), b.cellp(3, 8, 4), b.cellp(3, 21, 2)});
  b.add_path("toggle", {b.cellp(5, 16, 2, true), b.cellp(5, 6, 3, true),
                        b.cellp(5, 2, 4, true)});
  // The switch cell C sits under the controlled element, ringed by five
  // permanent G; the access cell A under the next crown tile carries six,
  // one of them paired across the shared corner with a G of C.
  Word c_cell = ch.cell(0, true);
  int a_tile = b.tid(4, 1);
  Word a_cell = ch.cell(a_tile, true);
  ch.register_name(c_cell, ch.address_text(0, true, {}));
  ch.register_name(a_cell, ch.address_text(a_tile, true, {}));
  for (int f : {6, 7, 8, 9, 10}) {
    Word h = ch.stack(0, true, {f});
    ch.register_name(h, ch.address_text(0, true, {f}));
    b.milestone(h, St::G, c_cell, 1);
  }
  // Face 4 is skipped: the cell under that crown tile shares a corner
  // with the last toggle element, and the train passing there would put
  // the shared corner cell on the missing sum. The face-3 stack gives
  // the sixth G a corner of its own.
  for (int f : {3, 7, 8, 9, 11}) {
    Word h = ch.stack(a_tile, true, {f});
    ch.register_name(h, ch.address_text(a_tile, true, {f}));
    b.milestone(h, St::G, a_cell, 1);
  }
  {
    int t = b.tid(4, 2);
    Word h = ch.cell(t, true);
    ch.register_name(h, ch.address_text(t, true, {}));
    b.milestone(h, St::G, a_cell, 1);
  }
  b.st.designed_pairs.emplace_back(ch.stack(0, true, {6}),
                                   ch.stack(a_tile, true, {7}));
  b.st.controller = ControllerMeta{c_cell, a_cell, ch.cell(0, false),
                                   ch.cell(b.tid(5, 2), true)};
  return b.finish();
}

Structure build_tunnel(const Chart& ch) {
  Builder b(ch, "tunnel");
  b.add_path("red", {b.cellp(5, 33, 3), b.cellp(5, 12, 4), b.cellp(5, 4, 2),
                     b.cellp(5, 1, 3), b.cellp(0, 0, 4), b.cellp(2, 1, 2),
                     b.cellp(2, 3, 3), b.cellp(2, 8, 4), b.cellp(2, 21, 2)});
  b.add_path("blue",
             {b.cellp(3, 21, 2), b.cellp(3, 8, 3), b.cellp(3, 3, 4),
              b.cellp(3, 3, 2, true), b.cellp(3, 1, 3, true),
              b.stackp(3, 1, true, {7}, 4), b.stackp(0, 0, true, {7}, 2),
              b.stackp(0, 0, true, {7, 8}, 3), b.stackp(0, 0, true, {8}, 4),
              b.stackp(1, 1, true, {6}, 2), b.cellp(1, 1, 3, true),
              b.cellp(1, 4, 4, true), b.cellp(1, 4, 2), b.cellp(1, 12, 3),
              b.cellp(1, 33, 4)});
  b.st.keep_blank.push_back(ch.cell(0, true));
  b.st.flagged_depth = 3;
  return b.finish();
}

Structure build_bypass(const Chart& ch) {
  Builder b(ch, "bypass");
  b.add_path("main",
             {b.cellp(3, 21, 4), b.cellp(3, 8, 2), b.cellp(3, 3, 3),
              b.cellp(3, 1, 4), b.stackp(3, 1, false, {7}, 2),
              b.stackp(0, 0, false, {7}, 3), b.stackp(2, 1, false, {6}, 4),
              b.cellp(2, 1, 2), b.cellp(2, 3, 3), b.cellp(2, 8, 4),
              b.cellp(2, 21, 2)});
  b.st.keep_blank.push_back(ch.cell(0, false));
  return b.finish();
}

const std::vector<std::string>& structure_names() {
  static const std::vector<std::string> names{
      "track12", "return12", "scheme8", "switch1", "switch2",
      "switch3", "fork",     "controller", "tunnel", "bypass"};
  return names;
}

Structure build_structure(const Chart& ch, const std::string& name) {
  if (name == "track12") return build_track(ch, 12, 2);
  if (name == "return12") return build_track(ch, 12, 2, true);
  if (name == "scheme8") return build_scheme_track(ch);
  if (name == "switch1") return build_switch_fixed(ch, 1);
  if (name == "switch2") return build_switch_fixed(ch, 2);
  if (name == "switch3") return build_switch_fixed(ch, 3);
  if (name == "fork") return build_fork(ch);
  if (name == "controller") return build_controller(ch);
  if (name == "tunnel") return build_tunnel(ch);
  if (name == "bypass") return build_bypass(ch);
  throw BuildError("unknown structure '" + name + "'");
}

void add_locomotive(const Structure& s, Configuration& cfg,
                    const std::string& path, int index) {
  const Path* p = s.path(path);
  if (!p) throw BuildError("structure " + s.name + " has no path '" + path + "'");
  if (index < 0 || index >= static_cast<int>(p->cells.size()))
    throw BuildError("locomotive index out of range on path '" + path + "'");
  cfg.set(p->cells[index].cell, inside_state(p->cells[index].kind));
}

Configuration with_locomotive(const Structure& s, const std::string& path,
                              int index) {
  Configuration cfg = s.decor();
  add_locomotive(s, cfg, path, index);
  return cfg;
}

std::map<Word, St> dynamic_cells(const Configuration& cfg,
                                 const Configuration& decor) {
  std::map<Word, St> out;
  for (const auto& [w, s] : cfg.cells())
    if (decor.get(w) != s) out[w] = s;
  for (const auto& [w, s] : decor.cells())
    if (cfg.get(w) != s && !out.count(w)) out[w] = cfg.get(w);
  return out;
}

std::vector<std::map<Word, St>> expected_trace(
    const Structure& s, const std::vector<std::pair<std::string, int>>& locos,
    int generations, St c_initial) {
  std::map<Word, std::vector<Word>> succ;
  std::map<Word, int> kind_of;
  for (const auto& p : s.paths)
    for (std::size_t i = 0; i < p.cells.size(); ++i) {
      kind_of[p.cells[i].cell] = p.cells[i].kind;
      auto& v = succ[p.cells[i].cell];
      if (i + 1 < p.cells.size()) {
        const Word& n = p.cells[i + 1].cell;
        if (std::find(v.begin(), v.end(), n) == v.end()) v.push_back(n);
      }
    }
  std::set<Word> occupied;
  for (const auto& [name, index] : locos) {
    const Path* p = s.path(name);
    if (!p) throw BuildError("structure " + s.name + " has no path '" + name + "'");
    if (index < 0 || index >= static_cast<int>(p->cells.size()))
      throw BuildError("locomotive index out of range on path '" + name + "'");
    occupied.insert(p->cells[index].cell);
  }
  St c_state = c_initial;
  bool a_state = false;
  auto snapshot = [&] {
    std::map<Word, St> m;
    for (const auto& w : occupied) m[w] = inside_state(kind_of[w]);
    if (s.controller) {
      if (c_state == St::R) m[s.controller->c_cell] = St::R;
      if (a_state) m[s.controller->a_cell] = St::R;
    }
    return m;
  };
  std::vector<std::map<Word, St>> out;
  out.push_back(snapshot());
  for (int g = 0; g < generations; ++g) {
    bool toggled = false;
    std::set<Word> next;
    for (const auto& w : occupied) {
      if (s.controller && w == s.controller->toggle_last) toggled = true;
      for (const auto& n : succ[w]) {
        if (s.controller && n == s.controller->controlled && c_state == St::R)
          continue;  // the switch absorbs the train
        next.insert(n);
      }
    }
    occupied = std::move(next);
    if (s.controller) {
      if (a_state) c_state = c_state == St::R ? St::W : St::R;
      a_state = toggled;
    }
    out.push_back(snapshot());
  }
  return out;
}

std::string frame_string(const Structure& s, const std::map<Word, St>& dynamic) {
  if (s.paths.size() != 1)
    throw BuildError("frame strings need a single-path structure");
  std::string out;
  for (const auto& c : s.paths[0].cells) {
    auto it = dynamic.find(c.cell);
    out += it != dynamic.end() ? state_char(it->second)
                               : static_cast<char>('0' + c.kind);
  }
  return out;
}

AuditReport audit_structure(const Chart& ch, const Structure& s,
                            const Transitions& tr) {
  AuditReport rep;
  auto note = [&](std::string msg) { rep.notes.push_back(std::move(msg)); };
  Configuration decor = s.decor();

  {
    Configuration cfg = decor;
    StepReport r = step(cfg, tr);
    rep.idle_fixed = r.ok() && r.changed == 0;
    if (!r.ok())
      note("idle: " + describe(r.misses.front(), ch));
    else if (r.changed)
      note("idle decoration is not a fixed point");
  }

  rep.isolation_ok = true;
  auto fail = [&](std::string msg) {
    rep.isolation_ok = false;
    note(std::move(msg));
  };
  std::set<Word> pathset;
  for (const auto& p : s.paths)
    for (const auto& c : p.cells) pathset.insert(c.cell);
  auto paired = [&](const Word& a, const Word& b) {
    for (const auto& pr : s.designed_pairs)
      if ((a == pr.first && b == pr.second) ||
          (a == pr.second && b == pr.first))
        return true;
    return false;
  };
  for (std::size_t i = 0; i < s.milestones.size(); ++i) {
    const Milestone& m = s.milestones[i];
    rep.max_depth = std::max(rep.max_depth, m.depth);
    if (pathset.count(m.host)) fail(ch.name(m.host) + " decorates a track cell");
    if (!cells_adjacent(m.host, m.element))
      fail(ch.name(m.host) + " does not touch its element");
    for (const auto& p : pathset)
      if (p != m.element && cells_adjacent(m.host, p))
        fail(ch.name(m.host) + " touches foreign element " + ch.name(p));
    for (std::size_t j = i + 1; j < s.milestones.size(); ++j)
      if (cells_adjacent(m.host, s.milestones[j].host) &&
          !paired(m.host, s.milestones[j].host))
        fail(ch.name(m.host) + " touches milestone " +
             ch.name(s.milestones[j].host));
    if (s.controller)
      for (Word w : {s.controller->c_cell, s.controller->a_cell})
        if (m.element != w && cells_adjacent(m.host, w))
          fail(ch.name(m.host) + " touches a switch cell");
  }
  for (const auto& kb : s.keep_blank)
    if (decor.get(kb) != St::W || pathset.count(kb))
      fail("reserved blank cell " + ch.name(kb) + " is occupied");
  if (rep.max_depth > s.flagged_depth)
    fail("milestones reach depth " + std::to_string(rep.max_depth));

  rep.dynamic_ok = true;
  auto check_run = [&](Configuration cfg,
                       const std::vector<std::map<Word, St>>& want,
                       const std::string& what) {
    for (std::size_t g = 1; g < want.size(); ++g) {
      StepReport r = step(cfg, tr);
      if (!r.ok()) {
        rep.dynamic_ok = false;
        note(what + " gen " + std::to_string(g) + ": " +
             describe(r.misses.front(), ch));
        return;
      }
      for (const auto& kb : s.keep_blank)
        if (cfg.get(kb) != St::W) {
          rep.dynamic_ok = false;
          note(what + " gen " + std::to_string(g) + ": reserved cell " +
               ch.name(kb) + " woke up");
          return;
        }
      if (dynamic_cells(cfg, decor) != want[g]) {
        rep.dynamic_ok = false;
        note(what + " gen " + std::to_string(g) + " diverges from the model");
        return;
      }
    }
  };
  if (!s.controller) {
    for (const auto& p : s.paths) {
      int horizon = static_cast<int>(p.cells.size()) + 3;
      auto want = expected_trace(s, {{p.name, 0}}, horizon);
      if (!want.back().empty()) {
        rep.dynamic_ok = false;
        note(p.name + ": the train never leaves");
        continue;
      }
      check_run(with_locomotive(s, p.name, 0), want, p.name);
    }
  } else {
    St c = St::W;
    for (const char* leg : {"main", "toggle", "main", "toggle"}) {
      const Path* p = s.path(leg);
      int horizon = static_cast<int>(p->cells.size()) + 4;
      auto want = expected_trace(s, {{leg, 0}}, horizon, c);
      Configuration cfg = decor;
      if (c == St::R) cfg.set(s.controller->c_cell, St::R);
      add_locomotive(s, cfg, leg, 0);
      check_run(std::move(cfg), want,
                std::string(leg) + (c == St::R ? "/set" : "/clear"));
      c = want.back().count(s.controller->c_cell) ? St::R : St::W;
    }
    if (c != St::W) {
      rep.dynamic_ok = false;
      note("the switch does not return to pass");
    }
  }
  return rep;
}

}  // namespace dodec
