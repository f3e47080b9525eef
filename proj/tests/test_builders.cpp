#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "dodec/builders.hpp"

using namespace dodec;

namespace {

const Chart& chart() {
  static Chart c(7);
  return c;
}

const Transitions& motion() {
  static RuleTable table = [] {
    std::string dir = DODEC_SOURCE_DIR;
    RuleTable base = RuleTable::parse_file(dir + "/data/rules.txt");
    base.append(RuleTable::parse_file(dir + "/data/rules_completion.txt"));
    return base;
  }();
  static Transitions tr(table);
  return tr;
}

Word at(const std::string& address) { return chart().parse(address); }

}  // namespace

TEST_CASE("kind helpers") {
  CHECK(kind_after(2) == 3);
  CHECK(kind_after(3) == 4);
  CHECK(kind_after(4) == 2);
  CHECK(inside_state(2) == St::R);
  CHECK(inside_state(3) == St::G);
  CHECK(inside_state(4) == St::B);
  CHECK(kind_weight(2) == 6);
  CHECK(kind_weight(3) == 8);
  CHECK(kind_weight(4) == 11);
  CHECK_THROWS_AS(kind_after(5), BuildError);
}

TEST_CASE("every structure passes its audit") {
  for (const auto& name : structure_names()) {
    CAPTURE(name);
    Structure s = build_structure(chart(), name);
    CHECK(s.name == name);
    AuditReport rep = audit_structure(chart(), s, motion());
    std::string notes;
    for (const auto& n : rep.notes) notes += n + "; ";
    CAPTURE(notes);
    CHECK(rep.idle_fixed);
    CHECK(rep.isolation_ok);
    CHECK(rep.dynamic_ok);
    CHECK(rep.ok());
  }
}

TEST_CASE("milestones carry exactly the element weights") {
  for (const auto& name : structure_names()) {
    CAPTURE(name);
    Structure s = build_structure(chart(), name);
    for (const PathCell* e : s.elements()) {
      int sum = 0;
      for (const auto& m : s.milestones)
        if (m.element == e->cell) sum += weight(m.state);
      CAPTURE(chart().name(e->cell));
      CHECK(sum == kind_weight(e->kind));
    }
  }
}

TEST_CASE("straight track of twelve elements") {
  Structure s = build_structure(chart(), "track12");
  REQUIRE(s.paths.size() == 1);
  const Path& p = s.paths[0];
  REQUIRE(p.cells.size() == 12);
  CHECK(p.cells[0].cell == at("(1)-232"));
  CHECK(p.cells[5].cell == at("(1)-1"));
  CHECK(p.cells[6].cell == at("0"));
  CHECK(p.cells[7].cell == at("(3)-1"));
  CHECK(p.cells[10].cell == at("(3)-21"));
  CHECK(p.cells[11].cell == at("(3)-55"));
  for (std::size_t i = 0; i < p.cells.size(); ++i)
    CHECK(p.cells[i].kind == 2 + static_cast<int>(i) % 3);

  Structure r = build_structure(chart(), "return12");
  REQUIRE(r.paths.size() == 1);
  CHECK(r.paths[0].cells[0].cell == at("(3)-55"));
  CHECK(r.paths[0].cells[11].cell == at("(1)-232"));
  CHECK(r.paths[0].cells[0].kind == 2);
}

TEST_CASE("the eight-element scheme track replays the published frames") {
  Structure s = build_structure(chart(), "scheme8");
  REQUIRE(s.paths.size() == 1);
  REQUIRE(s.paths[0].cells.size() == 8);
  const std::vector<std::string> frames{
      "3B234234", "34R34234", "342G4234", "3423B234",
      "34234R34", "342342G4", "3423423B", "34234234"};
  Configuration decor = s.decor();
  Configuration cfg = with_locomotive(s, "main", 1);
  auto want = expected_trace(s, {{"main", 1}}, 7);
  REQUIRE(want.size() == 8);
  for (std::size_t g = 0; g < frames.size(); ++g) {
    CAPTURE(g);
    auto dyn = dynamic_cells(cfg, decor);
    CHECK(frame_string(s, dyn) == frames[g]);
    CHECK(dyn == want[g]);
    if (g + 1 < frames.size()) {
      StepReport r = step(cfg, motion());
      REQUIRE(r.ok());
    }
  }
  StepReport r = step(cfg, motion());
  CHECK(r.ok());
  CHECK(r.changed == 0);
}

TEST_CASE("a fork duplicates the train") {
  Structure s = build_structure(chart(), "fork");
  REQUIRE(s.paths.size() == 2);
  auto want = expected_trace(s, {{"left", 0}}, 10);
  CHECK(want[4] == std::map<Word, St>{{at("0"), St::R}});
  CHECK(want[5] == std::map<Word, St>{{at("(1)-1"), St::G},
                                      {at("(5)-1"), St::G}});
  CHECK(want[6] == std::map<Word, St>{{at("(1)-4"), St::B},
                                      {at("(5)-3"), St::B}});
  CHECK(want[8] == std::map<Word, St>{{at("(1)-33"), St::G},
                                      {at("(5)-21"), St::G}});
  CHECK(want[9].empty());
  Configuration decor = s.decor();
  Configuration cfg = with_locomotive(s, "left", 0);
  for (int g = 1; g <= 9; ++g) {
    StepReport r = step(cfg, motion());
    REQUIRE(r.ok());
    CHECK(dynamic_cells(cfg, decor) == want[g]);
  }
}

TEST_CASE("fixed switches share their exit branch") {
  for (int variant : {1, 2, 3}) {
    CAPTURE(variant);
    Structure s = build_switch_fixed(chart(), variant);
    const Path* left = s.path("left");
    const Path* right = s.path("right");
    REQUIRE(left != nullptr);
    REQUIRE(right != nullptr);
    std::set<Word> lw, shared;
    for (const auto& c : left->cells) lw.insert(c.cell);
    for (const auto& c : right->cells)
      if (lw.count(c.cell)) shared.insert(c.cell);
    CHECK(shared.size() == 5);
    CHECK(shared.count(at("0")));
    CHECK(s.cell_at(at("0"))->kind == 4);
  }
  Structure s3 = build_switch_fixed(chart(), 3);
  CHECK(s3.flagged_depth == 3);
  CHECK(s3.path("right")->cells.size() == 17);
}

TEST_CASE("the controlled switch toggles and blocks") {
  Structure s = build_structure(chart(), "controller");
  REQUIRE(s.controller.has_value());
  const auto& meta = *s.controller;
  CHECK(meta.c_cell == at("b:0"));
  CHECK(meta.a_cell == at("b:(4)-1"));
  CHECK(meta.controlled == at("0"));
  CHECK(meta.toggle_last == at("b:(5)-2"));
  REQUIRE(s.designed_pairs.size() == 1);
  CHECK(cells_adjacent(s.designed_pairs[0].first, s.designed_pairs[0].second));

  auto toggle = expected_trace(s, {{"toggle", 0}}, 6);
  CHECK(toggle[2] == std::map<Word, St>{{meta.toggle_last, St::B}});
  CHECK(toggle[3] == std::map<Word, St>{{meta.a_cell, St::R}});
  CHECK(toggle[4] == std::map<Word, St>{{meta.c_cell, St::R}});
  CHECK(toggle[5] == toggle[4]);

  auto blocked = expected_trace(s, {{"main", 0}}, 6, St::R);
  CHECK(blocked[3] == std::map<Word, St>{{at("(1)-1"), St::G},
                                         {meta.c_cell, St::R}});
  CHECK(blocked[4] == std::map<Word, St>{{meta.c_cell, St::R}});
  CHECK(blocked[5] == blocked[4]);

  Configuration decor = s.decor();
  Configuration cfg = decor;
  add_locomotive(s, cfg, "toggle", 0);
  for (int g = 0; g < 6; ++g) REQUIRE(step(cfg, motion()).ok());
  CHECK(dynamic_cells(cfg, decor) ==
        std::map<Word, St>{{meta.c_cell, St::R}});
  add_locomotive(s, cfg, "main", 0);
  for (int g = 0; g < 8; ++g) REQUIRE(step(cfg, motion()).ok());
  CHECK(dynamic_cells(cfg, decor) ==
        std::map<Word, St>{{meta.c_cell, St::R}});
  add_locomotive(s, cfg, "toggle", 0);
  for (int g = 0; g < 6; ++g) REQUIRE(step(cfg, motion()).ok());
  CHECK(dynamic_cells(cfg, decor).empty());
}

TEST_CASE("the tunnel carries both lines and flags the unsafe overlap") {
  Structure s = build_structure(chart(), "tunnel");
  Configuration decor = s.decor();

  // Staggered trains pass: the blue line dives two generations before
  // the red train reaches the shared tile.
  Configuration cfg = decor;
  add_locomotive(s, cfg, "blue", 0);
  for (int g = 0; g < 2; ++g) REQUIRE(step(cfg, motion()).ok());
  add_locomotive(s, cfg, "red", 0);
  for (int g = 0; g < 14; ++g) {
    CAPTURE(g);
    StepReport r = step(cfg, motion());
    REQUIRE(r.ok());
    CHECK(cfg.get(at("b:0")) == St::W);
  }
  CHECK(dynamic_cells(cfg, decor).empty());

  // Simultaneous departure puts the red train on the shared tile exactly
  // when the blue one crests the dive, and the cell between the sheets
  // sees a sum with no rule.
  Configuration bad = decor;
  add_locomotive(s, bad, "red", 0);
  add_locomotive(s, bad, "blue", 0);
  for (int g = 0; g < 4; ++g) REQUIRE(step(bad, motion()).ok());
  Configuration before = bad;
  StepReport r = step(bad, motion());
  CHECK_FALSE(r.ok());
  REQUIRE(r.misses.size() > 0);
  CHECK(r.misses.front().cell == at("b:0"));
  CHECK(r.misses.front().current == St::W);
  CHECK(r.misses.front().sum == 4);
  CHECK(bad == before);
  CHECK(describe(r.misses.front(), chart()).find("b:0") != std::string::npos);
}

TEST_CASE("the bypass track keeps the junction tile blank") {
  Structure s = build_structure(chart(), "bypass");
  REQUIRE(s.keep_blank.size() == 1);
  CHECK(s.keep_blank[0] == at("0"));
  // The wedge between the two corner stacks may not host a milestone:
  // it touches both track cells.
  Word wedge = canon({1, 2, 7});
  CHECK(cells_adjacent(wedge, at("(3)-1_7")));
  CHECK(cells_adjacent(wedge, at("(2)-1_6")));
  for (const auto& m : s.milestones) CHECK(m.host != wedge);
  Configuration decor = s.decor();
  Configuration cfg = with_locomotive(s, "main", 0);
  for (int g = 0; g < 13; ++g) {
    StepReport r = step(cfg, motion());
    REQUIRE(r.ok());
    CHECK(cfg.get(at("0")) == St::W);
  }
  CHECK(dynamic_cells(cfg, decor).empty());
}

TEST_CASE("locomotive placement rejects bad coordinates") {
  Structure s = build_structure(chart(), "scheme8");
  Configuration cfg = s.decor();
  CHECK_THROWS_AS(add_locomotive(s, cfg, "side", 0), BuildError);
  CHECK_THROWS_AS(add_locomotive(s, cfg, "main", 8), BuildError);
  CHECK_THROWS_AS(add_locomotive(s, cfg, "main", -1), BuildError);
  CHECK_THROWS_AS(build_structure(chart(), "viaduct"), BuildError);
  CHECK_THROWS_AS(build_switch_fixed(chart(), 4), BuildError);
  CHECK_THROWS_AS(frame_string(build_structure(chart(), "fork"), {}),
                  BuildError);
}

TEST_CASE("milestone depth stays within the declared bound") {
  for (const auto& name : structure_names()) {
    CAPTURE(name);
    Structure s = build_structure(chart(), name);
    int deepest = 0;
    for (const auto& m : s.milestones) deepest = std::max(deepest, m.depth);
    CHECK(deepest <= s.flagged_depth);
    int expected = name == "switch3" || name == "tunnel" ? 3 : 2;
    CHECK(s.flagged_depth == expected);
  }
}
