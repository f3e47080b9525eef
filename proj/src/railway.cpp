#include "dodec/railway.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace dodec {

namespace {

const char* kind_str(CompKind k) {
  switch (k) {
    case CompKind::Fork: return "fork";
    case CompKind::Merge: return "fixed";
    case CompKind::Controller: return "controller";
    case CompKind::FlipFlop: return "flipflop";
    case CompKind::MemActive: return "memactive";
    case CompKind::MemPassive: return "mempassive";
    case CompKind::Crossing: return "crossing";
    case CompKind::Absorber: return "absorber";
    case CompKind::Tap: return "tap";
  }
  return "?";
}

bool port_known(CompKind k, const std::string& p, bool out) {
  auto any = [&p](std::initializer_list<const char*> names) {
    for (const char* n : names)
      if (p == n) return true;
    return false;
  };
  switch (k) {
    case CompKind::Fork:
      return out ? any({"out1", "out2"}) : any({"in"});
    case CompKind::Merge:
      return out ? any({"out"}) : any({"in1", "in2"});
    case CompKind::Controller:
      return out ? any({"out"}) : any({"in", "toggle"});
    case CompKind::FlipFlop:
      return out ? any({"out0", "out1"}) : any({"in"});
    case CompKind::MemActive:
      return out ? any({"out0", "out1"}) : any({"in", "set0", "set1"});
    case CompKind::MemPassive:
      return out ? any({"out", "notify0", "notify1"}) : any({"in0", "in1"});
    case CompKind::Crossing:
      return out ? any({"outa", "outb"}) : any({"ina", "inb"});
    case CompKind::Absorber:
      return out ? false : any({"in"});
    case CompKind::Tap:
      return out ? any({"out"}) : any({"in"});
  }
  return false;
}

}  // namespace

int Circuit::add(CompKind k, const std::string& name, int state) {
  comps.push_back({k, name, state});
  return static_cast<int>(comps.size()) - 1;
}

int Circuit::fork(const std::string& n) { return add(CompKind::Fork, n, 0); }
int Circuit::merge(const std::string& n) { return add(CompKind::Merge, n, 0); }
int Circuit::controller(const std::string& n, CtrlMode m) {
  return add(CompKind::Controller, n, m == CtrlMode::Blocking ? 1 : 0);
}
int Circuit::flipflop(const std::string& n, int sel) {
  return add(CompKind::FlipFlop, n, sel & 1);
}
int Circuit::mem_active(const std::string& n, int sel) {
  return add(CompKind::MemActive, n, sel & 1);
}
int Circuit::mem_passive(const std::string& n, int sel) {
  return add(CompKind::MemPassive, n, sel & 1);
}
int Circuit::crossing(const std::string& n) {
  return add(CompKind::Crossing, n, 0);
}
int Circuit::absorber(const std::string& n) {
  return add(CompKind::Absorber, n, 0);
}
int Circuit::tap(const std::string& n) { return add(CompKind::Tap, n, 0); }

const Circuit::Comp& Circuit::at(int comp) const {
  if (comp < 0 || comp >= size()) throw RailError("no such component");
  return comps[static_cast<std::size_t>(comp)];
}

Circuit::Comp& Circuit::at(int comp) {
  if (comp < 0 || comp >= size()) throw RailError("no such component");
  return comps[static_cast<std::size_t>(comp)];
}

void Circuit::check_port(int comp, const std::string& port, bool out) const {
  if (!port_known(at(comp).kind, port, out))
    throw RailError("component " + at(comp).name + " has no " +
                    (out ? "output" : "input") + " port '" + port + "'");
}

void Circuit::connect(int from, const std::string& out, int to,
                      const std::string& in, int delay) {
  check_port(from, out, true);
  check_port(to, in, false);
  if (delay < 1) throw RailError("track delay must be at least 1");
  auto key = std::make_pair(from, out);
  if (edges.count(key))
    throw RailError("port " + at(from).name + "." + out +
                    " already has a track");
  edges[key] = {to, in, delay};
}

bool Circuit::connected(int comp, const std::string& out) const {
  return edges.count({comp, out}) != 0;
}

void Circuit::expander(int comp, const std::string& out,
                       std::function<void()> fn) {
  check_port(comp, out, true);
  expanders[{comp, out}] = std::move(fn);
}

int Circuit::selection(int comp) const {
  CompKind k = at(comp).kind;
  if (k != CompKind::FlipFlop && k != CompKind::MemActive &&
      k != CompKind::MemPassive)
    throw RailError(at(comp).name + " has no selection");
  return at(comp).state;
}

void Circuit::select(int comp, int sel) {
  CompKind k = at(comp).kind;
  if (k != CompKind::FlipFlop && k != CompKind::MemActive &&
      k != CompKind::MemPassive)
    throw RailError(at(comp).name + " has no selection");
  at(comp).state = sel & 1;
}

CtrlMode Circuit::mode(int comp) const {
  if (at(comp).kind != CompKind::Controller)
    throw RailError(at(comp).name + " is not a controller");
  return at(comp).state ? CtrlMode::Blocking : CtrlMode::Permissive;
}

int Circuit::find(const std::string& n) const {
  for (int i = 0; i < size(); ++i)
    if (comps[static_cast<std::size_t>(i)].name == n) return i;
  return -1;
}

std::string Circuit::describe() const {
  std::ostringstream out;
  for (int i = 0; i < size(); ++i) {
    const Comp& c = comps[static_cast<std::size_t>(i)];
    out << "component " << i << ' ' << kind_str(c.kind) << ' ' << c.name;
    if (c.kind == CompKind::Controller)
      out << (c.state ? " blocking" : " permissive");
    else if (c.kind == CompKind::FlipFlop || c.kind == CompKind::MemActive ||
             c.kind == CompKind::MemPassive)
      out << " sel " << c.state;
    out << '\n';
  }
  for (const auto& [key, e] : edges)
    out << "track " << at(key.first).name << '.' << key.second << " -> "
        << at(e.to).name << '.' << e.in << " delay " << e.delay << '\n';
  return out.str();
}

std::string format_event(const Circuit& c, const RailEvent& e) {
  std::ostringstream out;
  out << e.time << ' ' << e.token << ' ' << c.name(e.comp) << '.' << e.port;
  return out.str();
}

// ---------------------------------------------------------------------

int Railway::inject(int comp, const std::string& in_port) {
  ckt.check_port(comp, in_port, false);
  int id = next_id++;
  flight.push_back({id, comp, in_port, 1});
  return id;
}

void Railway::emit(int comp, const std::string& out) {
  auto key = std::make_pair(comp, out);
  auto it = ckt.edges.find(key);
  if (it == ckt.edges.end()) {
    auto ex = ckt.expanders.find(key);
    if (ex != ckt.expanders.end()) {
      ex->second();
      it = ckt.edges.find(key);
    }
    if (it == ckt.edges.end())
      throw RailError("token on a dangling track at " + ckt.at(comp).name +
                      "." + out);
  }
  flight.push_back({next_id++, it->second.to, it->second.in,
                    it->second.delay});
}

void Railway::deliver(const Token& tk, const std::vector<Token>& pending) {
  // The component vector can grow while a track is being expanded, so
  // state is re-read through at() instead of held by reference.
  CompKind kind = ckt.at(tk.comp).kind;
  if (trace_all || kind == CompKind::Tap)
    log.push_back({t, tk.id, tk.comp, tk.port});
  // Re-emitted tokens get fresh ids except the first, which keeps the
  // incoming one so a locomotive can be followed through the trace.
  int keep = next_id;
  switch (kind) {
    case CompKind::Fork:
      emit(tk.comp, "out1");
      emit(tk.comp, "out2");
      break;
    case CompKind::Merge:
      emit(tk.comp, "out");
      break;
    case CompKind::Controller:
      if (tk.port == "toggle")
        ckt.at(tk.comp).state ^= 1;
      else if (ckt.at(tk.comp).state == 0)
        emit(tk.comp, "out");
      break;
    case CompKind::FlipFlop: {
      int sel = ckt.at(tk.comp).state;
      emit(tk.comp, sel ? "out1" : "out0");
      ckt.at(tk.comp).state = sel ^ 1;
      break;
    }
    case CompKind::MemActive:
      if (tk.port == "set0") {
        ckt.at(tk.comp).state = 0;
      } else if (tk.port == "set1") {
        ckt.at(tk.comp).state = 1;
      } else {
        for (const Token& other : flight)
          if (other.comp == tk.comp && other.port.rfind("set", 0) == 0)
            throw RailError("memory switch " + ckt.at(tk.comp).name +
                            " consulted while a reprogramming token is "
                            "on its way");
        for (const Token& other : pending)
          if (other.comp == tk.comp && other.port.rfind("set", 0) == 0)
            throw RailError("memory switch " + ckt.at(tk.comp).name +
                            " consulted while a reprogramming token is "
                            "on its way");
        emit(tk.comp, ckt.at(tk.comp).state ? "out1" : "out0");
      }
      break;
    case CompKind::MemPassive: {
      int branch = tk.port == "in1" ? 1 : 0;
      emit(tk.comp, "out");
      if (branch != ckt.at(tk.comp).state) {
        ckt.at(tk.comp).state = branch;
        emit(tk.comp, branch ? "notify1" : "notify0");
      }
      break;
    }
    case CompKind::Crossing:
      emit(tk.comp, tk.port == "ina" ? "outa" : "outb");
      break;
    case CompKind::Absorber:
      break;
    case CompKind::Tap:
      emit(tk.comp, "out");
      break;
  }
  // Renumber so the continuing token inherits the incoming id.
  for (Token& nt : flight)
    if (nt.id == keep) {
      nt.id = tk.id;
      break;
    }
}

void Railway::step() {
  ++t;
  std::vector<Token> arrivals;
  std::vector<Token> moving;
  moving.reserve(flight.size());
  for (Token& tk : flight) {
    if (--tk.remaining == 0)
      arrivals.push_back(tk);
    else
      moving.push_back(tk);
  }
  flight.swap(moving);
  std::sort(arrivals.begin(), arrivals.end(),
            [](const Token& a, const Token& b) {
              if (a.comp != b.comp) return a.comp < b.comp;
              if (a.port != b.port) return a.port < b.port;
              return a.id < b.id;
            });
  for (std::size_t i = 0; i + 1 < arrivals.size(); ++i) {
    const Token& a = arrivals[i];
    const Token& b = arrivals[i + 1];
    if (a.comp == b.comp && a.port == b.port)
      throw RailError("two locomotives on port " + ckt.at(a.comp).name + "." +
                      a.port);
    if (a.comp == b.comp && ckt.at(a.comp).kind == CompKind::Crossing)
      throw RailError("two locomotives in the crossing window at " +
                      ckt.at(a.comp).name);
  }
  for (std::size_t i = 0; i < arrivals.size(); ++i) {
    std::vector<Token> pending(arrivals.begin() +
                                   static_cast<std::ptrdiff_t>(i) + 1,
                               arrivals.end());
    deliver(arrivals[i], pending);
  }
}

void Railway::run(long steps) {
  for (long i = 0; i < steps; ++i) step();
}

int Railway::run_until(const std::vector<int>& taps, long budget) {
  std::size_t seen = log.size();
  for (long s = 0; s < budget; ++s) {
    if (quiescent())
      throw RailError("circuit went quiet before reaching a watched tap");
    step();
    for (; seen < log.size(); ++seen)
      for (int tp : taps)
        if (log[seen].comp == tp) return tp;
  }
  throw RailError("step budget exhausted before reaching a watched tap");
}

long Railway::settle(long budget) {
  long s = 0;
  while (!quiescent()) {
    if (s++ >= budget)
      throw RailError("step budget exhausted while settling");
    step();
  }
  return s;
}

bool Railway::saw(int comp, std::size_t since) const {
  for (std::size_t i = since; i < log.size(); ++i)
    if (log[i].comp == comp) return true;
  return false;
}

// ---------------------------------------------------------------------

int terminate(Circuit& c, int tap_comp) {
  if (!c.connected(tap_comp, "out"))
    c.connect(tap_comp, "out", c.absorber(c.name(tap_comp) + ".sink"), "in");
  return tap_comp;
}

FlipFlopSwitch build_flipflop_switch(Circuit& c, const std::string& name,
                                     int selected) {
  FlipFlopSwitch f;
  f.input = c.tap(name + ".in");
  f.out0 = c.tap(name + ".out0");
  f.out1 = c.tap(name + ".out1");
  f.c = c.fork(name + ".c");
  f.a = c.fork(name + ".a");
  f.s = c.fork(name + ".s");
  f.l = c.controller(name + ".l",
                     selected == 0 ? CtrlMode::Permissive : CtrlMode::Blocking);
  f.r = c.controller(name + ".r",
                     selected == 0 ? CtrlMode::Blocking : CtrlMode::Permissive);
  f.x = c.crossing(name + ".x");
  c.connect(f.input, "out", f.c, "in", 1);
  c.connect(f.c, "out1", f.l, "in", 3);
  c.connect(f.l, "out", f.out0, "in", 1);
  c.connect(f.c, "out2", f.a, "in", 1);
  c.connect(f.a, "out1", f.r, "in", 1);
  c.connect(f.r, "out", f.x, "inb", 1);
  c.connect(f.x, "outb", f.out1, "in", 1);
  c.connect(f.a, "out2", f.x, "ina", 1);
  c.connect(f.x, "outa", f.s, "in", 1);
  c.connect(f.s, "out1", f.l, "toggle", 2);
  c.connect(f.s, "out2", f.r, "toggle", 2);
  return f;
}

int flipflop_switch_selection(const Circuit& c, const FlipFlopSwitch& f) {
  CtrlMode l = c.mode(f.l), r = c.mode(f.r);
  if (l == CtrlMode::Permissive && r == CtrlMode::Blocking) return 0;
  if (l == CtrlMode::Blocking && r == CtrlMode::Permissive) return 1;
  throw RailError("flip-flop controllers out of step at " + c.name(f.l));
}

MemorySwitch build_memory_switch(Circuit& c, const std::string& name,
                                 int selected) {
  MemorySwitch m;
  m.a_in = c.tap(name + ".a.in");
  m.a_out0 = c.tap(name + ".a.out0");
  m.a_out1 = c.tap(name + ".a.out1");
  m.p_in0 = c.tap(name + ".p.in0");
  m.p_in1 = c.tap(name + ".p.in1");
  m.p_out = c.tap(name + ".p.out");
  m.ac = c.fork(name + ".a.c");
  m.as_ = c.fork(name + ".a.s");
  m.al = c.controller(name + ".a.l", selected == 0 ? CtrlMode::Permissive
                                                   : CtrlMode::Blocking);
  m.ar = c.controller(name + ".a.r", selected == 0 ? CtrlMode::Blocking
                                                   : CtrlMode::Permissive);
  m.pp = c.fork(name + ".p.p");
  m.pq = c.fork(name + ".p.q");
  m.pu = c.fork(name + ".p.u");
  m.ps = c.fork(name + ".p.s");
  // Roles are opposite in the passive half: the selected branch blocks.
  m.pl = c.controller(name + ".p.l", selected == 0 ? CtrlMode::Blocking
                                                   : CtrlMode::Permissive);
  m.pr = c.controller(name + ".p.r", selected == 0 ? CtrlMode::Permissive
                                                   : CtrlMode::Blocking);
  m.pf = c.merge(name + ".p.f");
  m.pt = c.merge(name + ".p.t");
  m.x = c.crossing(name + ".x");

  c.connect(m.a_in, "out", m.ac, "in", 1);
  c.connect(m.ac, "out1", m.al, "in", 2);
  c.connect(m.al, "out", m.a_out0, "in", 1);
  c.connect(m.ac, "out2", m.ar, "in", 2);
  c.connect(m.ar, "out", m.a_out1, "in", 1);
  c.connect(m.as_, "out1", m.al, "toggle", 1);
  c.connect(m.as_, "out2", m.ar, "toggle", 1);

  c.connect(m.p_in0, "out", m.pp, "in", 1);
  c.connect(m.pp, "out1", m.pf, "in1", 1);
  c.connect(m.pp, "out2", m.pl, "in", 1);
  c.connect(m.p_in1, "out", m.pq, "in", 1);
  c.connect(m.pq, "out1", m.pf, "in2", 1);
  c.connect(m.pq, "out2", m.pr, "in", 1);
  c.connect(m.pf, "out", m.x, "inb", 1);
  c.connect(m.x, "outb", m.p_out, "in", 1);
  c.connect(m.pl, "out", m.pt, "in1", 1);
  c.connect(m.pr, "out", m.pt, "in2", 1);
  c.connect(m.pt, "out", m.pu, "in", 1);
  c.connect(m.pu, "out1", m.x, "ina", 1);
  c.connect(m.x, "outa", m.as_, "in", 1);
  c.connect(m.pu, "out2", m.ps, "in", 1);
  c.connect(m.ps, "out1", m.pl, "toggle", 1);
  c.connect(m.ps, "out2", m.pr, "toggle", 1);
  return m;
}

int memory_switch_selection(const Circuit& c, const MemorySwitch& m) {
  int a = -1, p = -1;
  if (c.mode(m.al) == CtrlMode::Permissive && c.mode(m.ar) == CtrlMode::Blocking)
    a = 0;
  if (c.mode(m.al) == CtrlMode::Blocking && c.mode(m.ar) == CtrlMode::Permissive)
    a = 1;
  if (c.mode(m.pl) == CtrlMode::Blocking && c.mode(m.pr) == CtrlMode::Permissive)
    p = 0;
  if (c.mode(m.pl) == CtrlMode::Permissive && c.mode(m.pr) == CtrlMode::Blocking)
    p = 1;
  if (a < 0 || a != p)
    throw RailError("memory switch halves out of step at " + c.name(m.al));
  return a;
}

OneBitMemory build_one_bit_memory(Circuit& c, const std::string& name,
                                  int bit) {
  OneBitMemory m;
  m.w = c.tap(name + ".w");
  m.r = c.tap(name + ".r");
  m.e = c.tap(name + ".e");
  m.b0 = c.tap(name + ".b0");
  m.b1 = c.tap(name + ".b1");
  m.ff = c.flipflop(name + ".ff", bit);
  m.act = c.mem_active(name + ".act", bit);
  m.pas = c.mem_passive(name + ".pas", bit);
  c.connect(m.w, "out", m.ff, "in", 1);
  // The track labelled b at the flip-flop carries the label 1-b at the
  // passive half, so a write always enters the non-selected branch there.
  c.connect(m.ff, "out0", m.pas, "in1", 1);
  c.connect(m.ff, "out1", m.pas, "in0", 1);
  c.connect(m.pas, "out", m.e, "in", 1);
  c.connect(m.pas, "notify0", m.act, "set0", 1);
  c.connect(m.pas, "notify1", m.act, "set1", 1);
  c.connect(m.r, "out", m.act, "in", 1);
  c.connect(m.act, "out0", m.b0, "in", 1);
  c.connect(m.act, "out1", m.b1, "in", 1);
  return m;
}

int one_bit_value(const Circuit& c, const OneBitMemory& m) {
  int v = c.selection(m.ff);
  if (c.selection(m.act) != v || c.selection(m.pas) != v)
    throw RailError("one-bit memory out of step at " + c.name(m.ff));
  return v;
}

DispatchInc build_dispatch_inc(Circuit& c, const std::string& name,
                               int units) {
  if (units < 1) throw RailError("a dispatcher needs at least one unit");
  DispatchInc d;
  d.to_register = c.tap(name + ".toreg");
  d.scan_in = c.tap(name + ".scan");
  d.overrun = c.tap(name + ".overrun");
  std::vector<int> rj;
  for (int k = 0; k < units; ++k) {
    std::string u = name + ".u" + std::to_string(k);
    d.mem.push_back(build_one_bit_memory(c, u, 0));
    d.a.push_back(c.flipflop(u + ".a", 0));
    d.w_in.push_back(c.tap(u + ".win"));
    d.ret.push_back(c.tap(u + ".ret"));
    rj.push_back(c.merge(u + ".rj"));
    const OneBitMemory& m = d.mem.back();
    c.connect(d.w_in[k], "out", m.w, "in", 1);
    c.connect(m.e, "out", d.a[k], "in", 1);
    c.connect(d.a[k], "out0", rj[k], "in1", 1);
    c.connect(d.a[k], "out1", d.ret[k], "in", 1);
    c.connect(m.b1, "out", m.w, "in", 2);
    if (k == 0)
      c.connect(d.scan_in, "out", m.r, "in", 1);
    else
      c.connect(d.mem[k - 1].b0, "out", m.r, "in", 2);
    if (k > 0) c.connect(rj[k], "out", rj[k - 1], "in2", 1);
  }
  c.connect(rj[0], "out", d.to_register, "in", 1);
  c.connect(d.mem.back().b0, "out", d.overrun, "in", 1);
  return d;
}

void audit_dispatch_inc(const Circuit& c, const DispatchInc& d) {
  for (std::size_t k = 0; k < d.mem.size(); ++k) {
    if (one_bit_value(c, d.mem[k]) != 0)
      throw RailError("increment dispatcher unit " + std::to_string(k) +
                      " still marked");
    if (c.selection(d.a[k]) != 0)
      throw RailError("increment dispatcher unit " + std::to_string(k) +
                      " left its flip-flop turned");
  }
}

DispatchDec build_dispatch_dec(Circuit& c, const std::string& name,
                               int units) {
  if (units < 1) throw RailError("a dispatcher needs at least one unit");
  DispatchDec d;
  d.to_filter = c.tap(name + ".tofilter");
  d.dscan_in = c.tap(name + ".dscan");
  d.zscan_in = c.tap(name + ".zscan");
  d.overrun_d = c.tap(name + ".overrun_d");
  d.overrun_z = c.tap(name + ".overrun_z");
  std::vector<int> fj;
  for (int k = 0; k < units; ++k) {
    std::string u = name + ".u" + std::to_string(k);
    d.dmem.push_back(build_one_bit_memory(c, u + ".d", 0));
    d.zmem.push_back(build_one_bit_memory(c, u + ".z", 0));
    d.f.push_back(c.flipflop(u + ".f", 0));
    d.a.push_back(c.mem_active(u + ".a", 0));
    d.p.push_back(c.mem_passive(u + ".p", 0));
    d.d_in.push_back(c.tap(u + ".din"));
    d.ret_main.push_back(c.tap(u + ".ret"));
    d.ret_zero.push_back(c.tap(u + ".retz"));
    fj.push_back(c.merge(u + ".fj"));
    const OneBitMemory& dm = d.dmem.back();
    const OneBitMemory& zm = d.zmem.back();
    c.connect(d.d_in[k], "out", dm.w, "in", 1);
    c.connect(dm.e, "out", zm.w, "in", 1);
    c.connect(zm.e, "out", d.f[k], "in", 1);
    c.connect(d.f[k], "out0", fj[k], "in1", 1);
    c.connect(d.f[k], "out1", d.a[k], "in", 1);
    c.connect(d.a[k], "out0", d.ret_main[k], "in", 1);
    c.connect(d.a[k], "out1", d.ret_zero[k], "in", 1);
    c.connect(dm.b1, "out", d.p[k], "in0", 1);
    c.connect(zm.b1, "out", d.p[k], "in1", 1);
    c.connect(d.p[k], "out", dm.w, "in", 2);
    c.connect(d.p[k], "notify0", d.a[k], "set0", 1);
    c.connect(d.p[k], "notify1", d.a[k], "set1", 1);
    if (k == 0) {
      c.connect(d.dscan_in, "out", dm.r, "in", 1);
      c.connect(d.zscan_in, "out", zm.r, "in", 1);
    } else {
      c.connect(d.dmem[k - 1].b0, "out", dm.r, "in", 2);
      c.connect(d.zmem[k - 1].b0, "out", zm.r, "in", 2);
    }
    if (k > 0) c.connect(fj[k], "out", fj[k - 1], "in2", 1);
  }
  c.connect(fj[0], "out", d.to_filter, "in", 1);
  c.connect(d.dmem.back().b0, "out", d.overrun_d, "in", 1);
  c.connect(d.zmem.back().b0, "out", d.overrun_z, "in", 1);
  return d;
}

void audit_dispatch_dec(const Circuit& c, const DispatchDec& d) {
  for (std::size_t k = 0; k < d.dmem.size(); ++k) {
    if (one_bit_value(c, d.dmem[k]) != 0 || one_bit_value(c, d.zmem[k]) != 0)
      throw RailError("decrement dispatcher unit " + std::to_string(k) +
                      " still marked");
    if (c.selection(d.f[k]) != 0)
      throw RailError("decrement dispatcher unit " + std::to_string(k) +
                      " left its flip-flop turned");
    // The memory switch keeps its last routing; both halves must agree.
    if (c.selection(d.a[k]) != c.selection(d.p[k]))
      throw RailError("decrement dispatcher unit " + std::to_string(k) +
                      " has its memory switch halves out of step");
  }
}

DispatchOp build_dispatch_op(Circuit& c, const std::string& name) {
  DispatchOp d;
  d.entry = c.tap(name + ".entry");
  d.ret_in = c.tap(name + ".ret");
  d.zret_in = c.tap(name + ".zret");
  d.to_register = c.tap(name + ".toreg");
  d.to_inc = c.tap(name + ".toinc");
  d.to_dec_main = c.tap(name + ".todec");
  d.to_dec_zero = c.tap(name + ".todecz");
  d.overrun_z = c.tap(name + ".overrun_z");
  d.d = build_one_bit_memory(c, name + ".d", 0);
  d.z = build_one_bit_memory(c, name + ".z", 0);
  d.f = c.flipflop(name + ".f", 0);
  d.a = c.mem_active(name + ".a", 0);
  d.p = c.mem_passive(name + ".p", 0);
  c.connect(d.entry, "out", d.d.w, "in", 1);
  c.connect(d.d.e, "out", d.z.w, "in", 1);
  c.connect(d.z.e, "out", d.f, "in", 1);
  c.connect(d.f, "out0", d.to_register, "in", 1);
  c.connect(d.f, "out1", d.a, "in", 1);
  c.connect(d.a, "out0", d.to_dec_main, "in", 1);
  c.connect(d.a, "out1", d.to_dec_zero, "in", 1);
  c.connect(d.ret_in, "out", d.d.r, "in", 1);
  c.connect(d.d.b0, "out", d.to_inc, "in", 2);
  c.connect(d.d.b1, "out", d.p, "in0", 1);
  c.connect(d.zret_in, "out", d.z.r, "in", 1);
  c.connect(d.z.b0, "out", d.overrun_z, "in", 1);
  c.connect(d.z.b1, "out", d.p, "in1", 1);
  c.connect(d.p, "out", d.d.w, "in", 2);
  c.connect(d.p, "notify0", d.a, "set0", 1);
  c.connect(d.p, "notify1", d.a, "set1", 1);
  return d;
}

void audit_dispatch_op(const Circuit& c, const DispatchOp& d) {
  if (one_bit_value(c, d.d) != 0 || one_bit_value(c, d.z) != 0)
    throw RailError("operation filter still marked");
  if (c.selection(d.f) != 0)
    throw RailError("operation filter left its flip-flop turned");
  if (c.selection(d.a) != c.selection(d.p))
    throw RailError("operation filter has its memory switch halves "
                    "out of step");
}

// ---------------------------------------------------------------------

Register::Register(Circuit& c, const std::string& name, int initial)
    : ckt(c), base(name), initial_content(initial) {
  if (initial < 0) throw RailError("register content cannot be negative");
  entry_i = ckt.tap(base + ".entry_i");
  entry_d = ckt.tap(base + ".entry_d");
  exit_r = ckt.tap(base + ".exit_r");
  exit_z = ckt.tap(base + ".exit_z");
  ensure(initial + 1);
}

void Register::ensure(int count) {
  while (units() < count) add_unit();
}

void Register::add_unit() {
  int n = units();
  std::string u = base + ".u" + std::to_string(n);
  Unit ut;
  ut.i = build_one_bit_memory(ckt, u + ".i", n < initial_content ? 1 : 0);
  ut.d = build_one_bit_memory(ckt, u + ".d", n < initial_content ? 1 : 0);
  ut.rjoin = ckt.merge(u + ".rj");
  ut.wd = ckt.tap(u + (n % 2 == 0 ? ".wd1" : ".wd2"));
  ckt.connect(ut.i.b0, "out", ut.i.w, "in", 2);
  ckt.connect(ut.i.e, "out", ut.d.w, "in", 2);
  ckt.connect(ut.d.e, "out", ut.rjoin, "in1", 1);
  ckt.connect(ut.d.b0, "out", ut.wd, "in", 1);
  if (n == 0) {
    ckt.connect(ut.rjoin, "out", exit_r, "in", 1);
    ckt.connect(ut.wd, "out", exit_z, "in", 2);
    ckt.connect(entry_i, "out", ut.i.r, "in", 1);
    ckt.connect(entry_d, "out", ut.d.r, "in", 1);
  } else {
    Unit& prev = list.back();
    ckt.connect(ut.rjoin, "out", prev.rjoin, "in2", 1);
    ckt.connect(ut.wd, "out", prev.i.w, "in", 2);
    ckt.connect(prev.i.b1, "out", ut.i.r, "in", 2);
    ckt.connect(prev.d.b1, "out", ut.d.r, "in", 2);
  }
  list.push_back(ut);
  ckt.expander(ut.i.b1, "out", [this] { add_unit(); });
  ckt.expander(ut.d.b1, "out", [this] { add_unit(); });
}

int Register::content() const {
  int c = -1;
  for (int n = 0; n < units(); ++n) {
    int iv = one_bit_value(ckt, list[static_cast<std::size_t>(n)].i);
    int dv = one_bit_value(ckt, list[static_cast<std::size_t>(n)].d);
    if (iv != dv)
      throw RailError(base + ".u" + std::to_string(n) +
                      " holds unequal bits");
    if (iv == 0 && c < 0) c = n;
    if (iv == 1 && c >= 0)
      throw RailError(base + " is not a solid run of marks");
  }
  return c < 0 ? units() : c;
}

namespace {

RegisterOp drive_register(Railway& r, Register& reg, int entry, long budget) {
  Circuit& c = r.circuit();
  terminate(c, reg.exit_r);
  terminate(c, reg.exit_z);
  std::size_t m = r.mark();
  long t0 = r.now();
  r.inject(entry, "in");
  int hit = r.run_until({reg.exit_r, reg.exit_z}, budget);
  r.settle(budget);
  RegisterOp op;
  op.zero = hit == reg.exit_z;
  op.duration = r.now() - t0;
  for (std::size_t i = m; i < r.events().size() && op.aux.empty(); ++i)
    for (int n = 0; n < reg.units(); ++n)
      if (r.events()[i].comp == reg.wd_tap(n)) {
        const std::string& nm = c.name(reg.wd_tap(n));
        op.aux = nm.substr(nm.rfind('.') + 1);
        break;
      }
  return op;
}

}  // namespace

RegisterOp register_increment(Railway& r, Register& reg, long budget) {
  return drive_register(r, reg, reg.entry_i, budget);
}

RegisterOp register_decrement(Railway& r, Register& reg, long budget) {
  return drive_register(r, reg, reg.entry_d, budget);
}

}  // namespace dodec
