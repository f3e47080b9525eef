#include "dodec/machine.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

namespace dodec {

namespace {

std::vector<std::string> tokens_of(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

int parse_register(const std::string& tok, int lineno) {
  std::string digits = tok;
  if (!digits.empty() && (digits[0] == 'r' || digits[0] == 'R'))
    digits.erase(0, 1);
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos)
    throw MachineError("line " + std::to_string(lineno) +
                       ": bad register '" + tok + "'");
  return std::stoi(digits);
}

}  // namespace

Program Program::parse(const std::string& text) {
  struct Raw {
    Instr ins;
    std::string next, zero;
    int lineno;
  };
  std::vector<Raw> raw;
  std::map<std::string, int> labels;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok[0].size() < 2 || tok[0].back() != ':')
      throw MachineError("line " + std::to_string(lineno) +
                         ": expected 'label:' first");
    Raw r;
    r.lineno = lineno;
    r.ins.label = tok[0].substr(0, tok[0].size() - 1);
    if (labels.count(r.ins.label))
      throw MachineError("line " + std::to_string(lineno) +
                         ": duplicate label '" + r.ins.label + "'");
    labels[r.ins.label] = static_cast<int>(raw.size());
    if (tok.size() < 2)
      throw MachineError("line " + std::to_string(lineno) +
                         ": missing instruction");
    std::string op = upper(tok[1]);
    if (op == "INC" && tok.size() == 4) {
      r.ins.op = Instr::Op::Inc;
      r.ins.reg = parse_register(tok[2], lineno);
      r.next = tok[3];
    } else if (op == "DEC" && tok.size() == 5) {
      r.ins.op = Instr::Op::Dec;
      r.ins.reg = parse_register(tok[2], lineno);
      r.next = tok[3];
      r.zero = tok[4];
    } else if (op == "HALT" && tok.size() == 2) {
      r.ins.op = Instr::Op::Halt;
    } else {
      throw MachineError("line " + std::to_string(lineno) +
                         ": cannot read '" + line + "'");
    }
    raw.push_back(r);
  }
  if (raw.empty()) throw MachineError("empty program");
  Program p;
  auto resolve = [&labels](const std::string& name, int ln) {
    auto it = labels.find(name);
    if (it == labels.end())
      throw MachineError("line " + std::to_string(ln) + ": unknown label '" +
                         name + "'");
    return it->second;
  };
  for (const Raw& r : raw) {
    Instr ins = r.ins;
    if (ins.op != Instr::Op::Halt) ins.next = resolve(r.next, r.lineno);
    if (ins.op == Instr::Op::Dec) ins.zero = resolve(r.zero, r.lineno);
    p.code.push_back(ins);
  }
  return p;
}

Program Program::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MachineError("cannot open " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str());
}

int Program::registers() const {
  int n = 0;
  for (const Instr& i : code)
    if (i.op != Instr::Op::Halt) n = std::max(n, i.reg + 1);
  return n;
}

MachineTrace interpret(const Program& p, const std::vector<long>& inputs,
                       long max_steps) {
  std::size_t width =
      std::max<std::size_t>(inputs.size(),
                            static_cast<std::size_t>(p.registers()));
  std::vector<long> regs(width, 0);
  std::copy(inputs.begin(), inputs.end(), regs.begin());
  MachineTrace tr;
  int pc = 0;
  for (;;) {
    if (pc < 0 || pc >= static_cast<int>(p.code.size()))
      throw MachineError("program counter out of range");
    const Instr& ins = p.code[static_cast<std::size_t>(pc)];
    if (ins.op == Instr::Op::Halt) {
      tr.steps.push_back({pc, regs});
      tr.halted = true;
      break;
    }
    if (tr.executed >= max_steps) break;
    tr.steps.push_back({pc, regs});
    ++tr.executed;
    std::size_t r = static_cast<std::size_t>(ins.reg);
    if (ins.op == Instr::Op::Inc) {
      ++regs[r];
      pc = ins.next;
    } else if (regs[r] > 0) {
      --regs[r];
      pc = ins.next;
    } else {
      pc = ins.zero;
    }
  }
  tr.final_regs = regs;
  return tr;
}

// ---------------------------------------------------------------------

Compiled compile(const Program& p, const std::vector<long>& inputs) {
  Compiled m;
  m.prog = p;
  m.circuit = std::make_unique<Circuit>();
  Circuit& c = *m.circuit;
  std::size_t width =
      std::max<std::size_t>(inputs.size(),
                            static_cast<std::size_t>(p.registers()));
  m.initial.assign(width, 0);
  std::copy(inputs.begin(), inputs.end(), m.initial.begin());
  m.regs.resize(width);
  m.inc.resize(width);
  m.dec.resize(width);
  m.filter.resize(width);

  std::vector<int> incs(width, 0), decs(width, 0);
  for (const Instr& i : p.code) {
    if (i.op == Instr::Op::Inc) ++incs[static_cast<std::size_t>(i.reg)];
    if (i.op == Instr::Op::Dec) ++decs[static_cast<std::size_t>(i.reg)];
  }

  for (std::size_t r = 0; r < width; ++r) {
    if (incs[r] + decs[r] == 0) continue;
    std::string rn = "r" + std::to_string(r);
    m.regs[r] = std::make_unique<Register>(
        c, rn, static_cast<int>(m.initial[r]));
    m.filter[r] =
        std::make_unique<DispatchOp>(build_dispatch_op(c, rn + ".op"));
    DispatchOp& fo = *m.filter[r];
    c.connect(fo.to_register, "out", m.regs[r]->entry_d, "in");
    c.connect(m.regs[r]->exit_r, "out", fo.ret_in, "in");
    c.connect(m.regs[r]->exit_z, "out", fo.zret_in, "in");
    terminate(c, fo.overrun_z);
    if (incs[r] > 0) {
      m.inc[r] = std::make_unique<DispatchInc>(
          build_dispatch_inc(c, rn + ".inc", incs[r]));
      c.connect(m.inc[r]->to_register, "out", m.regs[r]->entry_i, "in");
      c.connect(fo.to_inc, "out", m.inc[r]->scan_in, "in");
      terminate(c, m.inc[r]->overrun);
    } else {
      terminate(c, fo.to_inc);
    }
    if (decs[r] > 0) {
      m.dec[r] = std::make_unique<DispatchDec>(
          build_dispatch_dec(c, rn + ".dec", decs[r]));
      c.connect(m.dec[r]->to_filter, "out", fo.entry, "in");
      c.connect(fo.to_dec_main, "out", m.dec[r]->dscan_in, "in");
      c.connect(fo.to_dec_zero, "out", m.dec[r]->zscan_in, "in");
      terminate(c, m.dec[r]->overrun_d);
      terminate(c, m.dec[r]->overrun_z);
    } else {
      terminate(c, fo.to_dec_main);
      terminate(c, fo.to_dec_zero);
    }
  }

  for (const Instr& i : p.code)
    m.entry.push_back(c.tap("prog." + i.label));
  m.start = c.tap("prog.start");
  c.connect(m.start, "out", m.entry[0], "in");
  m.halt = c.tap("prog.halt");
  c.connect(m.halt, "out", c.absorber("prog.halt.sink"), "in");

  std::vector<int> next_inc(width, 0), next_dec(width, 0);
  for (std::size_t i = 0; i < p.code.size(); ++i) {
    const Instr& ins = p.code[i];
    std::size_t r = static_cast<std::size_t>(ins.reg);
    switch (ins.op) {
      case Instr::Op::Halt:
        m.unit_of.push_back(-1);
        c.connect(m.entry[i], "out", m.halt, "in");
        break;
      case Instr::Op::Inc: {
        int k = next_inc[r]++;
        m.unit_of.push_back(k);
        DispatchInc& d = *m.inc[r];
        c.connect(m.entry[i], "out", d.w_in[static_cast<std::size_t>(k)],
                  "in");
        c.connect(d.ret[static_cast<std::size_t>(k)], "out",
                  m.entry[static_cast<std::size_t>(ins.next)], "in");
        break;
      }
      case Instr::Op::Dec: {
        int k = next_dec[r]++;
        m.unit_of.push_back(k);
        DispatchDec& d = *m.dec[r];
        c.connect(m.entry[i], "out", d.d_in[static_cast<std::size_t>(k)],
                  "in");
        c.connect(d.ret_main[static_cast<std::size_t>(k)], "out",
                  m.entry[static_cast<std::size_t>(ins.next)], "in");
        c.connect(d.ret_zero[static_cast<std::size_t>(k)], "out",
                  m.entry[static_cast<std::size_t>(ins.zero)], "in");
        break;
      }
    }
  }
  return m;
}

std::vector<long> Compiled::reg_view() const {
  std::vector<long> out(initial);
  for (std::size_t r = 0; r < regs.size(); ++r)
    if (regs[r]) out[r] = regs[r]->content();
  return out;
}

MachineTrace run_compiled(Compiled& m, long budget, long* des_steps) {
  Railway r(*m.circuit);
  std::map<int, std::size_t> instr_of;
  for (std::size_t i = 0; i < m.entry.size(); ++i)
    instr_of[m.entry[i]] = i;
  r.inject(m.start, "in");
  MachineTrace tr;
  std::size_t seen = 0;
  long steps = 0;
  while (steps < budget && !r.quiescent()) {
    r.step();
    ++steps;
    for (; seen < r.events().size(); ++seen) {
      auto it = instr_of.find(r.events()[seen].comp);
      if (it == instr_of.end()) continue;
      std::size_t idx = it->second;
      tr.steps.push_back({static_cast<int>(idx), m.reg_view()});
      if (m.prog.code[idx].op == Instr::Op::Halt) tr.halted = true;
    }
  }
  tr.final_regs = m.reg_view();
  tr.executed = static_cast<long>(tr.steps.size()) - (tr.halted ? 1 : 0);
  if (des_steps) *des_steps = steps;
  return tr;
}

namespace {

std::string show_step(const Program& p, const MachineStep& s) {
  std::ostringstream out;
  out << p.code[static_cast<std::size_t>(s.pc)].label << " [";
  for (std::size_t i = 0; i < s.regs.size(); ++i)
    out << (i ? " " : "") << s.regs[i];
  out << "]";
  return out.str();
}

}  // namespace

CosimResult cosimulate(const Program& p, const std::vector<long>& inputs,
                       long budget) {
  CosimResult res;
  res.oracle = interpret(p, inputs);
  Compiled m = compile(p, inputs);
  res.circuit = run_compiled(m, budget, &res.des_steps);

  const auto& a = res.oracle.steps;
  const auto& b = res.circuit.steps;
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (!(a[i] == b[i])) {
      res.divergence = "first divergence at position " + std::to_string(i) +
                       ": interpreter " + show_step(p, a[i]) + ", circuit " +
                       show_step(p, b[i]);
      return res;
    }
  if (a.size() != b.size()) {
    res.divergence = "trace lengths differ: interpreter " +
                     std::to_string(a.size()) + ", circuit " +
                     std::to_string(b.size()) +
                     (res.circuit.halted ? "" : " (circuit did not halt)");
    return res;
  }
  if (res.oracle.halted != res.circuit.halted) {
    res.divergence = res.oracle.halted
                         ? "the interpreter halted but the circuit did not"
                         : "the circuit halted but the interpreter did not";
    return res;
  }
  res.equal = true;
  return res;
}

}  // namespace dodec
