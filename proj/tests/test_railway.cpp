#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "dodec/railway.hpp"

using namespace dodec;

namespace {

// Sends one locomotive in at the given tap and lets everything settle.
void passage(Railway& r, int tap, long budget = 1000) {
  r.inject(tap, "in");
  r.settle(budget);
}

int count_deliveries(const Railway& r, std::size_t since, int comp,
                     const std::string& port) {
  int n = 0;
  for (std::size_t i = since; i < r.events().size(); ++i)
    if (r.events()[i].comp == comp && r.events()[i].port == port) ++n;
  return n;
}

}  // namespace

TEST_CASE("a fork doubles and a controller filters") {
  Circuit c;
  int in = c.tap("in");
  int f = c.fork("f");
  int pass = c.controller("pass", CtrlMode::Permissive);
  int block = c.controller("block", CtrlMode::Blocking);
  int a = c.tap("a"), b = c.tap("b");
  c.connect(in, "out", f, "in");
  c.connect(f, "out1", pass, "in");
  c.connect(f, "out2", block, "in", 3);
  c.connect(pass, "out", a, "in");
  c.connect(block, "out", b, "in");
  terminate(c, a);
  terminate(c, b);

  Railway r(c);
  std::size_t m = r.mark();
  passage(r, in);
  CHECK(count_deliveries(r, m, a, "in") == 1);
  CHECK(count_deliveries(r, m, b, "in") == 0);
  CHECK(r.quiescent());

  // A token on the toggle port flips the mode and is absorbed.
  r.inject(block, "toggle");
  r.settle(10);
  CHECK(c.mode(block) == CtrlMode::Permissive);
  m = r.mark();
  passage(r, in);
  CHECK(count_deliveries(r, m, b, "in") == 1);
}

TEST_CASE("primitive switches route and remember") {
  Circuit c;
  int in = c.tap("in");
  int ff = c.flipflop("ff", 0);
  int t0 = c.tap("t0"), t1 = c.tap("t1");
  c.connect(in, "out", ff, "in");
  c.connect(ff, "out0", t0, "in");
  c.connect(ff, "out1", t1, "in");
  terminate(c, t0);
  terminate(c, t1);
  Railway r(c);
  for (int i = 0; i < 4; ++i) {
    std::size_t m = r.mark();
    passage(r, in);
    CHECK(count_deliveries(r, m, i % 2 ? t1 : t0, "in") == 1);
  }

  int ra = c.tap("ra");
  int act = c.mem_active("act", 1);
  int a0 = c.tap("a0"), a1 = c.tap("a1");
  c.connect(ra, "out", act, "in");
  c.connect(act, "out0", a0, "in");
  c.connect(act, "out1", a1, "in");
  terminate(c, a0);
  terminate(c, a1);
  std::size_t m = r.mark();
  passage(r, ra);
  passage(r, ra);
  CHECK(count_deliveries(r, m, a1, "in") == 2);
  CHECK(c.selection(act) == 1);

  int p0 = c.tap("p0"), p1 = c.tap("p1");
  int pas = c.mem_passive("pas", 1);
  int po = c.tap("po");
  c.connect(p0, "out", pas, "in0");
  c.connect(p1, "out", pas, "in1");
  c.connect(pas, "out", po, "in");
  c.connect(pas, "notify0", act, "set0");
  c.connect(pas, "notify1", act, "set1");
  terminate(c, po);
  // Crossing the selected branch changes nothing.
  m = r.mark();
  passage(r, p1);
  CHECK(count_deliveries(r, m, po, "in") == 1);
  CHECK(c.selection(pas) == 1);
  CHECK(c.selection(act) == 1);
  // Crossing the other branch reprograms both halves.
  m = r.mark();
  passage(r, p0);
  CHECK(count_deliveries(r, m, po, "in") == 1);
  CHECK(c.selection(pas) == 0);
  CHECK(c.selection(act) == 0);
  m = r.mark();
  passage(r, ra);
  CHECK(count_deliveries(r, m, a0, "in") == 1);
}

TEST_CASE("the crossing window holds one locomotive at a time") {
  Circuit c;
  int ia = c.tap("ia"), ib = c.tap("ib");
  int x = c.crossing("x");
  int oa = c.tap("oa"), ob = c.tap("ob");
  c.connect(ia, "out", x, "ina");
  c.connect(ib, "out", x, "inb", 2);
  c.connect(x, "outa", oa, "in");
  c.connect(x, "outb", ob, "in");
  terminate(c, oa);
  terminate(c, ob);
  Railway r(c);
  std::size_t m = r.mark();
  r.inject(ia, "in");
  r.inject(ib, "in");
  r.settle(20);
  CHECK(count_deliveries(r, m, oa, "in") == 1);
  CHECK(count_deliveries(r, m, ob, "in") == 1);

  // Equal delays would put both in the window during the same step.
  Circuit c2;
  int j = c2.tap("j");
  int f = c2.fork("f");
  int x2 = c2.crossing("x2");
  int sa = c2.tap("sa"), sb = c2.tap("sb");
  c2.connect(j, "out", f, "in");
  c2.connect(f, "out1", x2, "ina");
  c2.connect(f, "out2", x2, "inb");
  c2.connect(x2, "outa", sa, "in");
  c2.connect(x2, "outb", sb, "in");
  terminate(c2, sa);
  terminate(c2, sb);
  Railway r2(c2);
  r2.inject(j, "in");
  CHECK_THROWS_AS(r2.settle(20), RailError);
}

TEST_CASE("the wiring rejects mistakes") {
  Circuit c;
  int a = c.tap("a"), b = c.tap("b");
  CHECK_THROWS_AS(c.connect(a, "typo", b, "in"), RailError);
  CHECK_THROWS_AS(c.connect(a, "out", b, "typo"), RailError);
  CHECK_THROWS_AS(c.connect(a, "out", b, "in", 0), RailError);
  c.connect(a, "out", b, "in");
  CHECK_THROWS_AS(c.connect(a, "out", b, "in"), RailError);

  // A token leaving through an unwired port is an error.
  Railway r(c);
  r.inject(a, "in");
  CHECK_THROWS_AS(r.run(5), RailError);
}

TEST_CASE("the flip-flop composite alternates its exits") {
  Circuit c;
  FlipFlopSwitch f = build_flipflop_switch(c, "ffsw");
  terminate(c, f.out0);
  terminate(c, f.out1);
  Railway r(c);
  r.trace_all = true;
  CHECK(flipflop_switch_selection(c, f) == 0);
  for (int i = 0; i < 6; ++i) {
    std::size_t m = r.mark();
    passage(r, f.input);
    int hit = i % 2 ? f.out1 : f.out0;
    int miss = i % 2 ? f.out0 : f.out1;
    CHECK(count_deliveries(r, m, hit, "in") == 1);
    CHECK(count_deliveries(r, m, miss, "in") == 0);
    // Each passage sends exactly one courier to each controller.
    CHECK(count_deliveries(r, m, f.l, "toggle") == 1);
    CHECK(count_deliveries(r, m, f.r, "toggle") == 1);
    CHECK(flipflop_switch_selection(c, f) == (i + 1) % 2);
    CHECK(r.quiescent());
  }
}

TEST_CASE("the memory switch composite routes by the last passive crossing") {
  Circuit c;
  MemorySwitch m = build_memory_switch(c, "msw", 0);
  for (int tp : {m.a_out0, m.a_out1, m.p_out}) terminate(c, tp);
  Railway r(c);

  std::mt19937 rng(20260823);
  int sel = 0;
  for (int i = 0; i < 60; ++i) {
    int op = static_cast<int>(rng() % 3);
    std::size_t mk = r.mark();
    if (op == 0) {
      passage(r, m.a_in);
      CHECK(count_deliveries(r, mk, sel ? m.a_out1 : m.a_out0, "in") == 1);
      CHECK(count_deliveries(r, mk, sel ? m.a_out0 : m.a_out1, "in") == 0);
    } else {
      int branch = op - 1;
      passage(r, branch ? m.p_in1 : m.p_in0);
      CHECK(count_deliveries(r, mk, m.p_out, "in") == 1);
      sel = branch;
    }
    CHECK(memory_switch_selection(c, m) == sel);
    CHECK(r.quiescent());
  }
}

TEST_CASE("the one-bit memory reads and writes through its five gates") {
  Circuit c;
  OneBitMemory m = build_one_bit_memory(c, "bit", 0);
  for (int tp : {m.e, m.b0, m.b1}) terminate(c, tp);
  Railway r(c);

  CHECK(one_bit_value(c, m) == 0);
  std::size_t mk = r.mark();
  passage(r, m.r);
  CHECK(count_deliveries(r, mk, m.b0, "in") == 1);
  CHECK(one_bit_value(c, m) == 0);

  mk = r.mark();
  passage(r, m.w);
  CHECK(count_deliveries(r, mk, m.e, "in") == 1);
  CHECK(one_bit_value(c, m) == 1);

  mk = r.mark();
  passage(r, m.r);
  CHECK(count_deliveries(r, mk, m.b1, "in") == 1);

  // Writing twice restores the bit.
  passage(r, m.w);
  passage(r, m.w);
  CHECK(one_bit_value(c, m) == 1);

  std::mt19937 rng(7);
  bool mirror = true;
  for (int i = 0; i < 500; ++i) {
    if (rng() % 2) {
      passage(r, m.w);
      mirror = !mirror;
    } else {
      mk = r.mark();
      passage(r, m.r);
      CHECK(count_deliveries(r, mk, mirror ? m.b1 : m.b0, "in") == 1);
    }
    CHECK(one_bit_value(c, m) == (mirror ? 1 : 0));
  }
}

TEST_CASE("the increment dispatcher remembers which instruction it serves") {
  Circuit c;
  DispatchInc d = build_dispatch_inc(c, "di", 3);
  terminate(c, d.to_register);
  terminate(c, d.overrun);
  for (int tp : d.ret) terminate(c, tp);
  Railway r(c);

  for (int k = 0; k < 3; ++k) {
    std::size_t mk = r.mark();
    passage(r, d.w_in[static_cast<std::size_t>(k)]);
    CHECK(count_deliveries(r, mk, d.to_register, "in") == 1);
    CHECK(one_bit_value(c, d.mem[static_cast<std::size_t>(k)]) == 1);

    // The return scan finds the marked unit, clears it and leaves
    // through that unit's own return track.
    mk = r.mark();
    passage(r, d.scan_in);
    for (int j = 0; j < 3; ++j)
      CHECK(count_deliveries(r, mk, d.ret[static_cast<std::size_t>(j)],
                             "in") == (j == k ? 1 : 0));
    CHECK(count_deliveries(r, mk, d.overrun, "in") == 0);
    audit_dispatch_inc(c, d);
    CHECK(r.quiescent());
  }
}

TEST_CASE("the decrement dispatcher returns on both tracks") {
  Circuit c;
  DispatchDec d = build_dispatch_dec(c, "dd", 2);
  terminate(c, d.to_filter);
  terminate(c, d.overrun_d);
  terminate(c, d.overrun_z);
  for (int tp : d.ret_main) terminate(c, tp);
  for (int tp : d.ret_zero) terminate(c, tp);
  Railway r(c);

  for (int k = 0; k < 2; ++k) {
    // Outbound: mark both memories of unit k, leave toward the filter.
    std::size_t mk = r.mark();
    passage(r, d.d_in[static_cast<std::size_t>(k)]);
    CHECK(count_deliveries(r, mk, d.to_filter, "in") == 1);
    CHECK(one_bit_value(c, d.dmem[static_cast<std::size_t>(k)]) == 1);
    CHECK(one_bit_value(c, d.zmem[static_cast<std::size_t>(k)]) == 1);
    CHECK(c.selection(d.f[static_cast<std::size_t>(k)]) == 1);

    // The decrement went through: return along the main scan.
    mk = r.mark();
    passage(r, d.dscan_in);
    CHECK(count_deliveries(r, mk, d.ret_main[static_cast<std::size_t>(k)],
                           "in") == 1);
    CHECK(count_deliveries(r, mk, d.ret_zero[static_cast<std::size_t>(k)],
                           "in") == 0);
    audit_dispatch_dec(c, d);

    // Same round trip, but the register was empty: the zero scan routes
    // to the other return track.
    passage(r, d.d_in[static_cast<std::size_t>(k)]);
    mk = r.mark();
    passage(r, d.zscan_in);
    CHECK(count_deliveries(r, mk, d.ret_zero[static_cast<std::size_t>(k)],
                           "in") == 1);
    CHECK(count_deliveries(r, mk, d.ret_main[static_cast<std::size_t>(k)],
                           "in") == 0);
    audit_dispatch_dec(c, d);
    CHECK(r.quiescent());
  }
}

TEST_CASE("the operation filter tells increments from decrements") {
  Circuit c;
  DispatchOp d = build_dispatch_op(c, "do");
  for (int tp : {d.to_register, d.to_inc, d.to_dec_main, d.to_dec_zero,
                 d.overrun_z})
    terminate(c, tp);
  Railway r(c);

  // An increment return finds both bits clear and leaves for the
  // increment dispatcher without touching anything.
  std::size_t mk = r.mark();
  passage(r, d.ret_in);
  CHECK(count_deliveries(r, mk, d.to_inc, "in") == 1);
  audit_dispatch_op(c, d);

  // A decrement first passes through, marking both bits.
  mk = r.mark();
  passage(r, d.entry);
  CHECK(count_deliveries(r, mk, d.to_register, "in") == 1);
  CHECK(one_bit_value(c, d.d) == 1);
  CHECK(one_bit_value(c, d.z) == 1);

  // Its return clears them and leaves along the decrement track.
  mk = r.mark();
  passage(r, d.ret_in);
  CHECK(count_deliveries(r, mk, d.to_dec_main, "in") == 1);
  audit_dispatch_op(c, d);

  // The empty-register track returns through the z memory instead.
  passage(r, d.entry);
  mk = r.mark();
  passage(r, d.zret_in);
  CHECK(count_deliveries(r, mk, d.to_dec_zero, "in") == 1);
  CHECK(count_deliveries(r, mk, d.to_dec_main, "in") == 0);
  audit_dispatch_op(c, d);
  CHECK(r.quiescent());
}

TEST_CASE("a register counts") {
  Circuit c;
  Register reg(c, "r0", 0);
  Railway r(c);

  CHECK(reg.content() == 0);
  CHECK(reg.units() == 1);

  RegisterOp op = register_increment(r, reg);
  CHECK(reg.content() == 1);
  CHECK_FALSE(op.zero);

  // The ladder grows lazily as the scans first travel past its end.
  register_increment(r, reg);
  register_increment(r, reg);
  CHECK(reg.content() == 3);
  CHECK(reg.units() >= 3);

  // A turn-back from an even unit reports wd1, from an odd one wd2.
  op = register_decrement(r, reg);  // turns back at unit 3
  CHECK(reg.content() == 2);
  CHECK_FALSE(op.zero);
  CHECK(op.aux == "wd2");
  op = register_decrement(r, reg);  // turns back at unit 2
  CHECK(reg.content() == 1);
  CHECK(op.aux == "wd1");

  register_decrement(r, reg);
  CHECK(reg.content() == 0);

  // Decrementing an empty register leaves through the empty track.
  op = register_decrement(r, reg);
  CHECK(op.zero);
  CHECK(reg.content() == 0);

  // An initial value fills a solid run of marked units.
  Circuit c2;
  Register reg2(c2, "r1", 4);
  Railway r2(c2);
  CHECK(reg2.content() == 4);
  CHECK(reg2.units() == 5);
  register_decrement(r2, reg2);
  CHECK(reg2.content() == 3);
  register_increment(r2, reg2);
  CHECK(reg2.content() == 4);
}

TEST_CASE("a thousand random register operations match a counter") {
  Circuit c;
  Register reg(c, "reg", 2);
  Railway r(c);
  std::mt19937 rng(123);
  long mirror = 2;
  for (int i = 0; i < 1000; ++i) {
    if (rng() % 2) {
      RegisterOp op = register_increment(r, reg);
      CHECK_FALSE(op.zero);
      ++mirror;
    } else {
      RegisterOp op = register_decrement(r, reg);
      // The empty track is taken exactly when the counter is at zero.
      CHECK(op.zero == (mirror == 0));
      if (mirror > 0) --mirror;
    }
    // content() itself checks the solid-run shape and bit agreement.
    CHECK(reg.content() == mirror);
    CHECK(r.quiescent());
  }
}

TEST_CASE("idle structures stay idle") {
  Circuit c;
  build_flipflop_switch(c, "f");
  build_memory_switch(c, "m", 1);
  build_one_bit_memory(c, "b", 1);
  build_dispatch_inc(c, "di", 2);
  build_dispatch_dec(c, "dd", 2);
  build_dispatch_op(c, "do");
  Register reg(c, "r", 3);
  std::string before = c.describe();
  Railway r(c);
  r.run(50);
  CHECK(r.quiescent());
  CHECK(r.events().empty());
  CHECK(c.describe() == before);
}

TEST_CASE("the circuit description and the trace are deterministic") {
  auto build = [](Circuit& c) {
    build_one_bit_memory(c, "bit", 1);
    build_flipflop_switch(c, "sw");
  };
  Circuit c1, c2;
  build(c1);
  build(c2);
  CHECK(c1.describe() == c2.describe());
  CHECK(c1.describe().find("component 0 tap bit.w\n") == 0);
  CHECK(c1.describe().find("track bit.w.out -> bit.ff.in delay 1\n") !=
        std::string::npos);

  OneBitMemory m = build_one_bit_memory(c1, "bit2", 0);
  for (int tp : {m.e, m.b0, m.b1}) terminate(c1, tp);
  Railway r(c1);
  passage(r, m.w);
  REQUIRE(!r.events().empty());
  const RailEvent& e = r.events().front();
  CHECK(format_event(c1, e) ==
        std::to_string(e.time) + " " + std::to_string(e.token) + " bit2.w.in");
}

TEST_CASE("a reprogramming race is an error, not a wrong answer") {
  // Consulting a memory switch while its reprogramming courier is still
  // travelling must fail loudly.
  Circuit c;
  int in = c.tap("in");
  int act = c.mem_active("act", 0);
  int setter = c.tap("setter");
  int o0 = c.tap("o0"), o1 = c.tap("o1");
  c.connect(in, "out", act, "in", 3);
  c.connect(setter, "out", act, "set1", 5);
  c.connect(act, "out0", o0, "in");
  c.connect(act, "out1", o1, "in");
  terminate(c, o0);
  terminate(c, o1);
  Railway r(c);
  r.inject(in, "in");
  r.inject(setter, "in");
  bool raced = false;
  try {
    r.settle(20);
  } catch (const RailError& e) {
    raced = std::string(e.what()).find("reprogramming") != std::string::npos;
  }
  CHECK(raced);
}
