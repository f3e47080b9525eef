#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "dodec/railway.hpp"

// Register machines and their compilation to railway circuits.  A machine
// program is a list of labelled instructions over counters r0, r1, ...:
//
//   label: INC r next        add one, continue at 'next'
//   label: DEC r next zero   subtract one and continue at 'next', or, when
//                            the register is empty, leave it and continue
//                            at 'zero'
//   label: HALT
//
// '#' starts a comment.  The compiler gives every register its ladder,
// one increment dispatcher unit per INC on it, one decrement dispatcher
// unit per DEC, and one operation filter; the program counter is a
// locomotive moving from instruction tap to instruction tap.

namespace dodec {

struct MachineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Instr {
  enum class Op { Inc, Dec, Halt };
  Op op = Op::Halt;
  int reg = 0;
  int next = -1;
  int zero = -1;
  std::string label;
};

struct Program {
  std::vector<Instr> code;
  static Program parse(const std::string& text);
  static Program load(const std::string& path);
  int registers() const;
};

// One observed state: the instruction about to execute and the register
// contents at that moment.
struct MachineStep {
  int pc = -1;
  std::vector<long> regs;
  bool operator==(const MachineStep&) const = default;
};

struct MachineTrace {
  std::vector<MachineStep> steps;  // ends with the halt state when halted
  bool halted = false;
  std::vector<long> final_regs;
  long executed = 0;
};

MachineTrace interpret(const Program& p, const std::vector<long>& inputs,
                       long max_steps = 1000000);

struct Compiled {
  Program prog;
  std::unique_ptr<Circuit> circuit;
  int start = -1;                  // tap feeding the first instruction
  int halt = -1;                   // tap all HALTs converge on
  std::vector<int> entry;          // per-instruction taps
  std::vector<int> unit_of;        // unit index within the dispatcher
  std::vector<long> initial;       // register contents at the start
  std::vector<std::unique_ptr<Register>> regs;       // null when untouched
  std::vector<std::unique_ptr<DispatchInc>> inc;     // null when no INC
  std::vector<std::unique_ptr<DispatchDec>> dec;     // null when no DEC
  std::vector<std::unique_ptr<DispatchOp>> filter;   // null when untouched

  std::vector<long> reg_view() const;  // current contents, all registers
};
Compiled compile(const Program& p, const std::vector<long>& inputs);

// Drives the compiled circuit until the halt tap, quiescence or the step
// budget, reading off the machine states at the instruction taps.
MachineTrace run_compiled(Compiled& m, long budget,
                          long* des_steps = nullptr);

struct CosimResult {
  bool equal = false;
  std::string divergence;  // empty when equal
  MachineTrace oracle;
  MachineTrace circuit;
  long des_steps = 0;
};
CosimResult cosimulate(const Program& p, const std::vector<long>& inputs,
                       long budget = 2000000);

}  // namespace dodec
