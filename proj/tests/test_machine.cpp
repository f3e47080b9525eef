#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "dodec/machine.hpp"

using namespace dodec;

namespace {

std::string data_dir() {
  return std::string(DODEC_SOURCE_DIR) + "/data/programs/";
}

}  // namespace

TEST_CASE("the parser reads labelled instructions") {
  Program p = Program::parse("start: INC r0 next\n"
                             "next:  DEC 1 start stop  # comment\n"
                             "\n"
                             "stop:  HALT\n");
  REQUIRE(p.code.size() == 3);
  CHECK(p.code[0].op == Instr::Op::Inc);
  CHECK(p.code[0].reg == 0);
  CHECK(p.code[0].next == 1);
  CHECK(p.code[0].label == "start");
  CHECK(p.code[1].op == Instr::Op::Dec);
  CHECK(p.code[1].reg == 1);
  CHECK(p.code[1].next == 0);
  CHECK(p.code[1].zero == 2);
  CHECK(p.code[2].op == Instr::Op::Halt);
  CHECK(p.registers() == 2);

  CHECK_THROWS_AS(Program::parse(""), MachineError);
  CHECK_THROWS_AS(Program::parse("a: INC 0 nowhere\n"), MachineError);
  CHECK_THROWS_AS(Program::parse("a: INC 0 a\na: HALT\n"), MachineError);
  CHECK_THROWS_AS(Program::parse("INC 0 a\n"), MachineError);
  CHECK_THROWS_AS(Program::parse("a: INC rx a\n"), MachineError);
  CHECK_THROWS_AS(Program::parse("a: DEC 0 a\n"), MachineError);
}

TEST_CASE("the interpreter is a plain counter machine") {
  Program add = Program::load(data_dir() + "add.rm");
  MachineTrace t = interpret(add, {2, 3});
  CHECK(t.halted);
  CHECK(t.final_regs == std::vector<long>{5, 0});
  REQUIRE(!t.steps.empty());
  CHECK(t.steps.front().pc == 0);
  CHECK(t.steps.front().regs == std::vector<long>{2, 3});
  CHECK(t.steps.back().pc == 2);  // the halt state is recorded

  Program sub = Program::load(data_dir() + "sub.rm");
  CHECK(interpret(sub, {5, 3}).final_regs == std::vector<long>{2, 0});
  CHECK(interpret(sub, {2, 4}).final_regs == std::vector<long>{0, 0});
  CHECK(interpret(sub, {0, 0}).final_regs == std::vector<long>{0, 0});

  Program mx = Program::load(data_dir() + "max.rm");
  CHECK(interpret(mx, {3, 1}).final_regs[0] == 3);
  CHECK(interpret(mx, {1, 4}).final_regs[0] == 4);
  CHECK(interpret(mx, {5, 5}).final_regs[0] == 5);
  CHECK(interpret(mx, {0, 0}).final_regs[0] == 0);

  // A budget cut is reported, not fatal.
  Program spin = Program::parse("a: INC 0 a\n");
  MachineTrace cut = interpret(spin, {0}, 10);
  CHECK_FALSE(cut.halted);
  CHECK(cut.executed == 10);
}

TEST_CASE("the compiler builds one dispatcher unit per instruction") {
  Program add = Program::load(data_dir() + "add.rm");
  Compiled m = compile(add, {2, 3});
  // r0 is only incremented, r1 only decremented.
  REQUIRE(m.regs[0] != nullptr);
  REQUIRE(m.regs[1] != nullptr);
  REQUIRE(m.inc[0] != nullptr);
  CHECK(m.inc[0]->w_in.size() == 1);
  CHECK(m.inc[1] == nullptr);
  REQUIRE(m.dec[1] != nullptr);
  CHECK(m.dec[1]->d_in.size() == 1);
  CHECK(m.dec[0] == nullptr);
  CHECK(m.filter[0] != nullptr);
  CHECK(m.filter[1] != nullptr);
  CHECK(m.regs[0]->content() == 2);
  CHECK(m.regs[1]->content() == 3);
  CHECK(m.entry.size() == 3);
  CHECK(m.unit_of == std::vector<int>{0, 0, -1});

  Program mx = Program::load(data_dir() + "max.rm");
  Compiled mm = compile(mx, {1, 1});
  CHECK(mm.inc[0]->w_in.size() == 3);
  CHECK(mm.dec[0]->d_in.size() == 1);
  CHECK(mm.dec[1]->d_in.size() == 2);
  CHECK(mm.inc[2]->w_in.size() == 1);
  CHECK(mm.dec[2]->d_in.size() == 1);
}

TEST_CASE("the compiled circuit executes the program") {
  Program add = Program::load(data_dir() + "add.rm");
  Compiled m = compile(add, {2, 1});
  MachineTrace t = run_compiled(m, 100000);
  CHECK(t.halted);
  CHECK(t.final_regs == std::vector<long>{3, 0});
  // The instruction taps reproduce the whole state sequence.
  MachineTrace o = interpret(add, {2, 1});
  CHECK(t.steps == o.steps);
}

TEST_CASE("cosimulation agrees on the worked examples") {
  Program add = Program::load(data_dir() + "add.rm");
  CosimResult r = cosimulate(add, {2, 3});
  CHECK(r.equal);
  CHECK(r.divergence.empty());
  CHECK(r.circuit.final_regs == std::vector<long>{5, 0});
  CHECK(r.des_steps > 0);

  Program sub = Program::load(data_dir() + "sub.rm");
  CHECK(cosimulate(sub, {4, 2}).equal);
  CHECK(cosimulate(sub, {2, 4}).equal);

  Program mx = Program::load(data_dir() + "max.rm");
  CHECK(cosimulate(mx, {3, 1}).equal);
  CHECK(cosimulate(mx, {1, 4}).equal);
  CHECK(cosimulate(mx, {0, 0}).equal);
}

TEST_CASE("an unfinished circuit run reads as a divergence") {
  Program add = Program::load(data_dir() + "add.rm");
  CosimResult r = cosimulate(add, {2, 3}, 40);
  CHECK_FALSE(r.equal);
  CHECK(r.divergence.find("did not halt") != std::string::npos);
}
