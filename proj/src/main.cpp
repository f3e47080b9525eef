#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "dodec/machine.hpp"
#include "dodec/render.hpp"
#include "dodec/scenario.hpp"

// Command-line front end.  Exit codes: 0 success, 1 audit failure (rule
// conflicts, golden divergence, rule misses, cosimulation divergence,
// stuck circuits), 2 usage errors (bad flags, unreadable or malformed
// input files).

using namespace dodec;

namespace {

#ifndef DODEC_SOURCE_DIR
#define DODEC_SOURCE_DIR "."
#endif

Transitions load_transitions(const std::string& data) {
  RuleTable t = RuleTable::parse_file(data + "/rules.txt");
  t.append(RuleTable::parse_file(data + "/rules_completion.txt"));
  return Transitions(t);
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int cmd_check_rules(const std::string& data, bool json) {
  RuleTable t = RuleTable::parse_file(data + "/rules.txt");
  auto conflicts = t.conflicts();
  auto wits = t.total_witnesses();
  int maxw = 0;
  for (const Rule& r : t.rules()) maxw = std::max(maxw, r.checksum);
  if (json) {
    std::ostringstream o;
    o << "{\"rules\":" << t.rules().size() << ",\"conflicts\":[";
    for (std::size_t i = 0; i < conflicts.size(); ++i)
      o << (i ? "," : "") << "[" << conflicts[i].a << "," << conflicts[i].b
        << "]";
    o << "],\"max_weight\":" << maxw << ",\"witnesses\":[";
    for (std::size_t i = 0; i < wits.size(); ++i)
      o << (i ? "," : "") << "[" << wits[i].a << "," << wits[i].b << ","
        << wits[i].total << "]";
    o << "]}";
    std::cout << o.str() << "\n";
  } else {
    std::cout << t.rules().size() << " rules, " << conflicts.size()
              << " conflicts, max weight " << maxw << "\n";
    std::cout << "non-totalistic witnesses:";
    for (const auto& w : wits)
      std::cout << " " << w.a << "/" << w.b << " (total " << w.total << ")";
    std::cout << "\n";
    for (const auto& c : conflicts)
      std::cout << "conflict: rules " << c.a << " and " << c.b << "\n";
  }
  return conflicts.empty() ? 0 : 1;
}

int cmd_build(const std::string& data, const std::string& scen_path,
              const std::string& out) {
  (void)data;
  Chart chart;
  register_window_names(chart);
  Scenario sc = Scenario::load(scen_path);
  Configuration cfg = compose(chart, sc);
  std::ostringstream os;
  cfg.dump(os, chart);
  write_out(out, os.str());
  return 0;
}

int cmd_run(const std::string& data, const std::string& scen_path,
            const std::string& golden, const std::string& out) {
  Chart chart;
  Scenario sc = Scenario::load(scen_path);
  Transitions tr = load_transitions(data);
  ScenarioRun run = run_scenario(chart, sc, tr);
  std::string trace = write_trace(chart, sc, run);
  if (!out.empty()) write_out(out, trace);
  if (!run.ok()) {
    std::cerr << "rule lookup failed at generation " << run.frames.size()
              << ":\n";
    for (const RuleMiss& m : run.misses)
      std::cerr << "  " << describe(m, chart) << "\n";
    return 1;
  }
  if (!golden.empty()) {
    int d = compare_trace(trace, slurp(golden));
    if (d >= 0) {
      std::cout << "trace diverges from golden at generation " << d << "\n";
      return 1;
    }
    std::cout << "trace matches golden (" << run.frames.size()
              << " generations)\n";
    return 0;
  }
  if (out.empty()) std::cout << trace;
  return 0;
}

int cmd_render(const std::string& data, const std::string& scen_path, int gen,
               const RenderSpec& spec, const std::string& out) {
  Chart chart;
  Scenario sc = Scenario::load(scen_path);
  Transitions tr = load_transitions(data);
  ScenarioRun run = run_scenario(chart, sc, tr);
  if (gen < 0) gen = static_cast<int>(run.frames.size()) - 1;
  if (gen >= static_cast<int>(run.frames.size())) {
    if (!run.ok()) {
      std::cerr << "run aborted before generation " << gen << ":\n";
      for (const RuleMiss& m : run.misses)
        std::cerr << "  " << describe(m, chart) << "\n";
      return 1;
    }
    throw ScenarioError("generation " + std::to_string(gen) +
                        " beyond the run length");
  }
  write_out(out, render_svg(chart, run.frames[gen], spec));
  return 0;
}

int cmd_sim_circuit(const std::string& name,
                    const std::vector<std::string>& injects, bool quiet,
                    long budget, bool verbose) {
  Circuit c;
  std::optional<Register> reg;
  std::vector<int> exits;
  if (name == "flipflop") {
    auto f = build_flipflop_switch(c, "sw");
    exits = {f.out0, f.out1};
  } else if (name == "memory") {
    auto m = build_memory_switch(c, "sw");
    exits = {m.a_out0, m.a_out1, m.p_out};
  } else if (name == "onebit") {
    auto b = build_one_bit_memory(c, "bit");
    exits = {b.e, b.b0, b.b1};
  } else if (name == "dispatch-inc") {
    auto d = build_dispatch_inc(c, "di", 3);
    exits = d.ret;
    exits.push_back(d.to_register);
    exits.push_back(d.overrun);
  } else if (name == "dispatch-dec") {
    auto d = build_dispatch_dec(c, "dd", 2);
    exits = d.ret_main;
    exits.insert(exits.end(), d.ret_zero.begin(), d.ret_zero.end());
    exits.push_back(d.to_filter);
    exits.push_back(d.overrun_d);
    exits.push_back(d.overrun_z);
  } else if (name == "dispatch-op") {
    auto d = build_dispatch_op(c, "op");
    exits = {d.to_register, d.to_inc, d.to_dec_main, d.to_dec_zero,
             d.overrun_z};
  } else if (name == "register") {
    reg.emplace(c, "reg", 2);
    exits = {reg->exit_r, reg->exit_z};
  } else {
    throw std::runtime_error("unknown circuit '" + name + "'");
  }
  for (int e : exits) terminate(c, e);
  if (!quiet) std::cout << c.describe();
  if (injects.empty()) return 0;
  Railway r(c);
  r.trace_all = verbose;
  for (const std::string& inj : injects) {
    std::string nm = inj, port = "in";
    if (auto p = inj.find(':'); p != std::string::npos) {
      nm = inj.substr(0, p);
      port = inj.substr(p + 1);
    }
    int comp = c.find(nm);
    if (comp < 0) throw std::runtime_error("no component named '" + nm + "'");
    std::size_t m = r.mark();
    r.inject(comp, port);
    r.settle(budget);
    for (std::size_t i = m; i < r.events().size(); ++i)
      std::cout << format_event(c, r.events()[i]) << "\n";
    if (!r.quiescent()) {
      std::cerr << "budget exhausted with " << r.tokens()
                << " token(s) in flight\n";
      return 1;
    }
  }
  return 0;
}

std::vector<long> parse_inputs(const std::string& text) {
  std::vector<long> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    out.push_back(std::stol(item));
  }
  return out;
}

int cmd_sim_machine(const std::string& path, const std::string& inputs_text,
                    long budget, bool cosim) {
  Program p = Program::load(path);
  std::vector<long> inputs = parse_inputs(inputs_text);
  if (cosim) {
    CosimResult r = cosimulate(p, inputs, budget);
    std::cout << "oracle instructions: " << r.oracle.executed
              << ", circuit instructions: " << r.circuit.executed
              << ", railway steps: " << r.des_steps << "\n";
    if (r.equal) {
      std::cout << "verdict: equal\n";
      return 0;
    }
    std::cout << "verdict: divergence\n" << r.divergence << "\n";
    return 1;
  }
  Compiled m = compile(p, inputs);
  long des = 0;
  MachineTrace t = run_compiled(m, budget, &des);
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const MachineStep& s = t.steps[i];
    std::cout << i << " " << p.code.at(s.pc).label << " [";
    for (std::size_t k = 0; k < s.regs.size(); ++k)
      std::cout << (k ? " " : "") << s.regs[k];
    std::cout << "]\n";
  }
  std::cout << "halted: " << (t.halted ? "yes" : "no") << "\n";
  std::cout << "registers:";
  for (long v : t.final_regs) std::cout << " " << v;
  std::cout << "\nrailway steps: " << des << "\n";
  return t.halted ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tile-level rule engine and railway circuitry on the dodecagrid"};
  app.require_subcommand(1);
  std::string data = std::string(DODEC_SOURCE_DIR) + "/data";
  app.add_option("--data", data, "data directory (rule tables)");

  auto* c_check = app.add_subcommand("check-rules", "audit the rule table");
  bool json = false;
  c_check->add_flag("--json", json, "machine-readable report");

  std::string scen_path, golden, out_path;
  auto* c_build = app.add_subcommand(
      "build", "compose a scenario's starting configuration and print it");
  c_build->add_option("--scenario", scen_path, "scenario file")->required();
  c_build->add_option("--out", out_path, "output file (default stdout)");

  auto* c_run = app.add_subcommand("run", "run a scenario and emit its trace");
  c_run->add_option("--scenario", scen_path, "scenario file")->required();
  c_run->add_option("--golden", golden, "compare against this trace");
  c_run->add_option("--out", out_path, "write the trace here");

  auto* c_render = app.add_subcommand("render", "draw one generation as SVG");
  int gen = 0;
  RenderSpec spec;
  std::string proj = "h", colors;
  c_render->add_option("--scenario", scen_path, "scenario file")->required();
  c_render->add_option("--generation", gen,
                       "generation to draw; -1 for the last");
  c_render->add_option("--projection", proj, "h (disc) or v (side view)");
  c_render->add_option("--center", spec.center, "window center tile address");
  c_render->add_option("--radius", spec.radius, "window radius, at most 4");
  c_render->add_option("--colors", colors,
                       "four comma-separated fills for W,B,R,G");
  bool no_marks = false;
  c_render->add_flag("--no-face-marks", no_marks,
                     "list stacked cells instead of drawing them");
  c_render->add_option("--out", out_path, "output file (default stdout)");

  auto* c_simc = app.add_subcommand("simulate-circuit",
                                    "build a railway circuit and push tokens");
  std::string circuit = "flipflop";
  std::vector<std::string> injects;
  long budget = 10000;
  bool quiet = false, verbose = false;
  c_simc->add_option("--circuit", circuit,
                     "flipflop, memory, onebit, dispatch-inc, dispatch-dec, "
                     "dispatch-op or register");
  c_simc->add_option("--inject", injects,
                     "component[:port] to feed a token, one passage each");
  c_simc->add_option("--budget", budget, "railway steps per passage");
  c_simc->add_flag("--quiet", quiet, "skip the circuit description");
  c_simc->add_flag("--verbose", verbose, "log every delivery, not just taps");

  auto* c_simm = app.add_subcommand("simulate-machine",
                                    "run a register machine program");
  std::string program, inputs_text;
  long mbudget = 2000000;
  bool cosim = false;
  c_simm->add_option("--program", program, "program file")->required();
  c_simm->add_option("--inputs", inputs_text, "comma-separated register values");
  c_simm->add_option("--budget", mbudget, "railway step budget");
  c_simm->add_flag("--cosim", cosim,
                   "also interpret the program and compare the traces");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*c_check) return cmd_check_rules(data, json);
    if (*c_build) return cmd_build(data, scen_path, out_path);
    if (*c_run) return cmd_run(data, scen_path, golden, out_path);
    if (*c_render) {
      spec.projection = proj.empty() ? 'h' : proj[0];
      spec.face_marks = !no_marks;
      if (!colors.empty()) {
        std::istringstream in(colors);
        std::string item;
        for (int i = 0; i < 4 && std::getline(in, item, ','); ++i)
          spec.color[i] = item;
      }
      return cmd_render(data, scen_path, gen, spec, out_path);
    }
    if (*c_simc)
      return cmd_sim_circuit(circuit, injects, quiet, budget, verbose);
    if (*c_simm) return cmd_sim_machine(program, inputs_text, mbudget, cosim);
  } catch (const RailError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
