#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dodec/engine.hpp"

using namespace dodec;

namespace {

const std::string kData = std::string(DODEC_SOURCE_DIR) + "/data/";

const Chart& chart() {
  static Chart c(6);
  return c;
}

Transitions shipped_transitions() {
  RuleTable t = RuleTable::parse_file(kData + "rules.txt");
  t.append(RuleTable::parse_file(kData + "rules_completion.txt"));
  return Transitions(t);
}

}  // namespace

TEST_CASE("configuration basics") {
  Configuration c;
  CHECK(c.population() == 0);
  c.set(Word{1}, St::G);
  c.set(Word{2}, St::R);
  CHECK(c.population() == 2);
  CHECK(c.get(Word{1}) == St::G);
  CHECK(c.get(Word{}) == St::W);
  c.set(Word{1}, St::W);
  CHECK(c.population() == 1);
  CHECK(c.get(Word{1}) == St::W);
}

TEST_CASE("dump and load round trip") {
  const Chart& ch = chart();
  Configuration c;
  c.set(ch.parse("(3)-1"), St::G);
  c.set(ch.parse("(3)-1_6_7"), St::R);
  c.set(ch.parse("b:0_7"), St::B);
  std::ostringstream out;
  c.dump(out, ch);
  CHECK(out.str() == "(3)-1 G\n(3)-1_6_7 R\nb:0_7 B\n");
  std::istringstream in(out.str());
  Configuration back = Configuration::load(in, ch);
  CHECK(back == c);

  std::istringstream bad1("0 X\n");
  CHECK_THROWS_AS(Configuration::load(bad1, ch), EngineError);
  std::istringstream bad2("(9)-1 G\n");
  CHECK_THROWS_AS(Configuration::load(bad2, ch), GridError);
  std::istringstream cmt("# note\n\n0 G\n");
  CHECK(Configuration::load(cmt, ch).population() == 1);
}

TEST_CASE("isolated elements are fixed points") {
  Transitions tr = shipped_transitions();
  for (St s : {St::G, St::R}) {
    Configuration c;
    c.set(Word{5}, s);
    StepReport rep = step(c, tr);
    CHECK(rep.ok());
    CHECK(rep.changed == 0);
    CHECK(rep.max_sum == weight(s));
    CHECK(c.get(Word{5}) == s);
    CHECK(c.population() == 1);
  }
}

TEST_CASE("a stranded B has no rule and the step aborts") {
  Transitions tr = shipped_transitions();
  Configuration c;
  c.set(Word{3}, St::B);
  Configuration before = c;
  StepReport rep = step(c, tr);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.misses.size() == 1);
  CHECK(rep.misses[0].current == St::B);
  CHECK(rep.misses[0].sum == 0);
  CHECK(c == before);  // nothing committed
  std::string msg = describe(rep.misses[0], chart());
  CHECK(msg.find("state B") != std::string::npos);
  CHECK(msg.find("sum 0") != std::string::npos);

  RunReport rr = run(c, tr, 5);
  CHECK(rr.generations == 0);
  CHECK_FALSE(rr.last.ok());
}

TEST_CASE("a saturated cell dissolves") {
  // G at the origin flanked by two G and one R neighbor sees sum 8 and
  // clears; the flankers see only the origin and persist.
  Transitions tr = shipped_transitions();
  Configuration c;
  c.set(Word{}, St::G);
  c.set(Word{1}, St::G);
  c.set(Word{2}, St::G);
  c.set(Word{4}, St::R);
  StepReport rep = step(c, tr);
  REQUIRE(rep.ok());
  CHECK(rep.changed == 1);
  CHECK(rep.max_sum == 8);
  CHECK(c.get(Word{}) == St::W);
  CHECK(c.get(Word{1}) == St::G);
  CHECK(c.get(Word{4}) == St::R);
  CHECK(c.population() == 3);

  StepReport rep2 = step(c, tr);
  CHECK(rep2.ok());
  CHECK(rep2.changed == 0);  // now a fixed point
}

TEST_CASE("run reports committed generations") {
  Transitions tr = shipped_transitions();
  Configuration c;
  c.set(Word{}, St::G);
  c.set(Word{1}, St::G);
  c.set(Word{2}, St::G);
  c.set(Word{4}, St::R);
  int calls = 0;
  RunReport rr = run(c, tr, 3, [&](int g, const Configuration& cfg) {
    ++calls;
    CHECK(g == calls);
    CHECK(cfg.population() >= 3);
  });
  CHECK(rr.generations == 3);
  CHECK(calls == 3);
  CHECK(rr.last.ok());
}
