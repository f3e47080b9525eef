#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

// Circuit-level railway simulator.  Locomotives are featureless tokens
// travelling over one-way tracks with integer delays; switches follow the
// classical railway model: a fixed switch always routes the same way (only
// its passive merge matters here), a flip-flop switch alternates between
// its two branches, and a memory switch routes along the branch of its
// last passive crossing.  The flip-flop and memory switches exist twice:
// as primitive components with the abstract behaviour, and as composite
// sub-circuits assembled from forks, controllers and fixed switches the
// way the tile-level structures realize them.  The composites are checked
// against the primitives; larger structures use the primitives.

namespace dodec {

struct RailError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class CompKind {
  Fork,        // in -> out1, out2: duplicates the locomotive
  Merge,       // in1, in2 -> out: passive fixed switch
  Controller,  // in -> out when permissive, absorbed when blocking;
               // a token on 'toggle' flips the mode and is absorbed
  FlipFlop,    // in -> out<sel>, then the selection flips
  MemActive,   // in -> out<sel>, no change; 'set0'/'set1' reprogram it
  MemPassive,  // in0, in1 -> out; entering the branch that is not
               // selected reselects it and emits a token on notify<branch>
  Crossing,    // ina -> outa, inb -> outb: two independent lines that
               // share a window, so simultaneous occupation is an error
  Absorber,    // in -> nothing
  Tap          // in -> out, recording an event on every passage
};

enum class CtrlMode : uint8_t { Permissive, Blocking };

class Circuit {
 public:
  int fork(const std::string& name);
  int merge(const std::string& name);
  int controller(const std::string& name, CtrlMode mode);
  int flipflop(const std::string& name, int selected);
  int mem_active(const std::string& name, int selected);
  int mem_passive(const std::string& name, int selected);
  int crossing(const std::string& name);
  int absorber(const std::string& name);
  int tap(const std::string& name);

  // One edge per output port; several edges may end on one input port
  // (a junction of incoming tracks).  Delays are at least 1.
  void connect(int from, const std::string& out, int to,
               const std::string& in, int delay = 1);
  bool connected(int comp, const std::string& out) const;

  // Called when a token leaves through a port that has no track yet; the
  // callback is expected to connect the port.  Registers grow this way.
  void expander(int comp, const std::string& out, std::function<void()> fn);

  int size() const { return static_cast<int>(comps.size()); }
  const std::string& name(int comp) const { return at(comp).name; }
  CompKind kind(int comp) const { return at(comp).kind; }
  int selection(int comp) const;
  void select(int comp, int sel);
  CtrlMode mode(int comp) const;
  int find(const std::string& name) const;  // -1 when absent

  std::string describe() const;

 private:
  friend class Railway;
  struct Comp {
    CompKind kind;
    std::string name;
    int state;
  };
  struct Edge {
    int to;
    std::string in;
    int delay;
  };
  std::vector<Comp> comps;
  std::map<std::pair<int, std::string>, Edge> edges;
  std::map<std::pair<int, std::string>, std::function<void()>> expanders;

  int add(CompKind k, const std::string& name, int state);
  const Comp& at(int comp) const;
  Comp& at(int comp);
  void check_port(int comp, const std::string& port, bool out) const;
};

struct RailEvent {
  long time;
  int token;
  int comp;
  std::string port;
};

std::string format_event(const Circuit& c, const RailEvent& e);

// Discrete-event loop.  Each step every travelling token advances one
// delay unit; tokens that reach a component are delivered in component,
// then port, order, and the component's transition emits the follow-up
// tokens onto the outgoing tracks.  Two tokens may never be delivered to
// the same port in the same step, a crossing may not see both of its
// lines in one step, and a memory switch may not be consulted while a
// reprogramming token is still on its way to it.
class Railway {
 public:
  explicit Railway(Circuit& c) : ckt(c) {}

  Circuit& circuit() { return ckt; }

  int inject(int comp, const std::string& in_port);
  void step();
  void run(long steps);
  bool quiescent() const { return flight.empty(); }
  long now() const { return t; }
  int tokens() const { return static_cast<int>(flight.size()); }

  // Steps until one of the given taps records a passage and returns it;
  // fails when the budget runs out or the circuit goes quiet first.
  int run_until(const std::vector<int>& taps, long budget);
  // Steps until no token is travelling; returns the number of steps.
  long settle(long budget);

  // Tap passages are always logged; trace_all additionally logs every
  // delivery at every component.
  bool trace_all = false;
  const std::vector<RailEvent>& events() const { return log; }
  std::size_t mark() const { return log.size(); }
  bool saw(int comp, std::size_t since) const;

 private:
  struct Token {
    int id;
    int comp;
    std::string port;
    int remaining;
  };
  Circuit& ckt;
  long t = 0;
  int next_id = 1;
  std::vector<Token> flight;
  std::vector<RailEvent> log;

  void deliver(const Token& tk, const std::vector<Token>& pending);
  void emit(int comp, const std::string& out);
};

// ---------------------------------------------------------------------
// Composite switches, transcribed from the track schematics.

// in -> fork c -> {controller l -> out0; fork a -> {controller r -> out1;
// fork s -> toggles of l and r}}.  One controller is permissive and one
// blocking; each passage exits through the permissive one and the two
// courier tokens then swap both modes.  The couriers reach l and r only
// after the main token has passed or died there, and the courier track
// crosses the out1 track at x.
struct FlipFlopSwitch {
  int input, out0, out1;  // taps
  int c, a, s;            // forks
  int l, r;               // controllers; l guards out0
  int x;                  // crossing
};
FlipFlopSwitch build_flipflop_switch(Circuit& c, const std::string& name,
                                     int selected = 0);
int flipflop_switch_selection(const Circuit& c, const FlipFlopSwitch& f);

// Active half: like the flip-flop switch but without the self-toggling
// fork; its toggle fork as_ is fed from the passive half.  Passive half:
// each entry branch forks at pp/pq into an exit token (through the fixed
// switch pf) and a probe aimed at a controller.  The selected branch's
// controller blocks the probe, so crossing the selected branch changes
// nothing; the other probe passes, and via pt -> pu fans out to both
// toggle forks, reselecting the entered branch in both halves.
struct MemorySwitch {
  int a_in, a_out0, a_out1;  // active taps
  int p_in0, p_in1, p_out;   // passive taps
  int al, ar;                // active controllers; al guards a_out0
  int pl, pr;                // passive controllers; pl guards branch 0
  int ac, as_;               // active entry fork and toggle fork
  int pp, pq, pu, ps;        // passive forks
  int pf, pt;                // fixed switches
  int x;                     // crossing
};
MemorySwitch build_memory_switch(Circuit& c, const std::string& name,
                                 int selected = 0);
int memory_switch_selection(const Circuit& c, const MemorySwitch& m);

// ---------------------------------------------------------------------
// One-bit memory.  Writing enters at w: the flip-flop routes along the
// current bit and flips; the track labelled b at the flip-flop arrives at
// the passive half through the branch labelled 1-b, which therefore
// always mismatches the selection, reselects both halves and lets the
// token out at e.  Reading enters at r: the active half routes it to b0
// or b1 without any change.  The bit is the common selection.
struct OneBitMemory {
  int w, r, e, b0, b1;  // gate taps
  int ff, act, pas;     // switches
};
OneBitMemory build_one_bit_memory(Circuit& c, const std::string& name,
                                  int bit = 0);
int one_bit_value(const Circuit& c, const OneBitMemory& m);

// ---------------------------------------------------------------------
// Dispatchers.  A program with several instructions on one register funnels
// them through per-register structures; each instruction owns one unit.

// Increment dispatcher.  Entering at w_in[k] sets unit k's bit and leaves
// through to_register (the per-unit flip-flop a initially aims that way
// and flips).  The return scan enters at scan_in, walks the units through
// their read gates, finds the one set bit, clears it, and leaves through
// ret[k] (the flip-flop, flipped by the outbound passage, now aims at the
// program and flips back).  Both passages together restore every switch.
struct DispatchInc {
  std::vector<int> w_in;  // program entries
  std::vector<int> ret;   // program returns
  int to_register;
  int scan_in;
  int overrun;  // the scan fell off the last unit; never taken
  std::vector<OneBitMemory> mem;
  std::vector<int> a;  // per-unit flip-flops
};
DispatchInc build_dispatch_inc(Circuit& c, const std::string& name, int units);
void audit_dispatch_inc(const Circuit& c, const DispatchInc& d);

// Decrement dispatcher.  Entering at d_in[k] sets unit k's d and z bits
// and leaves through to_filter (the flip-flop f aims there first, then at
// the memory switch a).  The two return scans enter at dscan_in (the
// decrement succeeded) or zscan_in (the register was empty); the set unit
// routes the token into the passive half p through branch 0 or 1, which
// reprograms a and sends the token around the rewrite loop: clear d,
// clear z, through f to a, which now routes to ret_main[k] or ret_zero[k].
// Everything is restored except a, whose selection is arbitrary.
struct DispatchDec {
  std::vector<int> d_in;
  std::vector<int> ret_main, ret_zero;
  int to_filter;
  int dscan_in, zscan_in;
  int overrun_d, overrun_z;
  std::vector<OneBitMemory> dmem, zmem;
  std::vector<int> f;  // flip-flops
  std::vector<int> a;  // memory switch, active halves
  std::vector<int> p;  // memory switch, passive halves
};
DispatchDec build_dispatch_dec(Circuit& c, const std::string& name, int units);
void audit_dispatch_dec(const Circuit& c, const DispatchDec& d);

// Operation filter: one decrement-dispatcher unit shared by the whole
// register.  The decrement path from the dispatcher enters at entry, sets
// both bits and continues to the register's decrement gate; increments
// bypass it entirely.  Every return from the register passes ret_in (or
// zret_in for the empty-register track): bits still clear means the
// operation was an increment and the token leaves at to_inc; bits set
// means a decrement, and the rewrite loop clears them and routes through
// a to to_dec_main or to_dec_zero.
struct DispatchOp {
  int entry;
  int ret_in, zret_in;
  int to_register;
  int to_inc;
  int to_dec_main, to_dec_zero;
  int overrun_z;
  OneBitMemory d, z;
  int f, a, p;
};
DispatchOp build_dispatch_op(Circuit& c, const std::string& name);
void audit_dispatch_op(const Circuit& c, const DispatchOp& d);

// ---------------------------------------------------------------------
// Register: a half-infinite ladder of units, each holding an i bit and a
// d bit that agree when idle; value c puts (1,1) in units 0..c-1 and
// (0,0) beyond.  Units materialize on demand: the scan tracks leaving the
// last unit grow the ladder when first travelled.
//
// Increment: enter at entry_i, scan i bits to the first 0 (unit c), loop
// back into that unit's write gate, set i, cross to the d memory, set d,
// and leave on the return track exit_r.
//
// Decrement: enter at entry_d, scan d bits to the first 0 (unit c).  For
// c > 0 the scan turns back on the auxiliary track (wd1 from even units,
// wd2 from odd ones) into unit c-1's write gate, clears both bits there
// and leaves through exit_r.  For c = 0 unit 0's turn-back is the empty
// track exit_z and nothing changes.
class Register {
 public:
  Register(Circuit& c, const std::string& name, int initial);
  Register(const Register&) = delete;
  Register& operator=(const Register&) = delete;

  int entry_i, entry_d, exit_r, exit_z;  // taps

  void ensure(int count);
  int units() const { return static_cast<int>(list.size()); }
  int content() const;  // checks the two-bit agreement and prefix shape
  const OneBitMemory& imem(int n) const { return list.at(n).i; }
  const OneBitMemory& dmem(int n) const { return list.at(n).d; }
  int wd_tap(int n) const { return list.at(n).wd; }

 private:
  struct Unit {
    OneBitMemory i, d;
    int rjoin;  // merge collecting the return track
    int wd;     // auxiliary-track tap leaving this unit's d scan
  };
  Circuit& ckt;
  std::string base;
  int initial_content;
  std::vector<Unit> list;
  void add_unit();
};

struct RegisterOp {
  bool zero = false;  // left through the empty track
  std::string aux;    // "wd1", "wd2", or empty when no turn-back happened
  long duration = 0;
};
RegisterOp register_increment(Railway& r, Register& reg, long budget = 20000);
RegisterOp register_decrement(Railway& r, Register& reg, long budget = 20000);

// Wires a tap's outgoing track to a fresh absorber if it has none yet.
int terminate(Circuit& c, int tap_comp);

}  // namespace dodec
