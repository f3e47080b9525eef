#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dodec/render.hpp"
#include "dodec/scenario.hpp"

using namespace dodec;
namespace fs = std::filesystem;

namespace {

std::string root() { return std::string(DODEC_SOURCE_DIR); }

struct CliResult {
  int code = -1;
  std::string out;
};

// Runs the installed binary with stderr folded into stdout.
CliResult run_cli(const std::string& args) {
  std::string cmd = std::string(DODEC_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  CliResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string scenario(const std::string& name) {
  return root() + "/data/scenarios/" + name + ".scn";
}

std::string golden(const std::string& name) {
  return root() + "/data/golden/" + name + ".txt";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_file(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "dodec-cli-test";
  fs::create_directories(dir);
  return dir / name;
}

const char* kAllScenarios[] = {
    "bypass_idle",     "controller_block", "controller_idle",
    "controller_toggle", "controller_unblock", "fmvtracks",
    "fork_idle",       "fork_split",       "scheme8",
    "stab_fix0",       "switch2_idle",     "switch3_idle",
    "track12",         "track_pair",       "tunnel_blue",
    "tunnel_idle",     "tunnel_red",
};

}  // namespace

TEST_CASE("check-rules reports a clean table") {
  CliResult r = run_cli("check-rules");
  CHECK(r.code == 0);
  CHECK(r.out.find("35 rules, 0 conflicts, max weight 20") != std::string::npos);
  CHECK(r.out.find("non-totalistic witnesses:") != std::string::npos);
}

TEST_CASE("check-rules --json is machine readable") {
  CliResult r = run_cli("check-rules --json");
  CHECK(r.code == 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["rules"] == 35);
  CHECK(j["conflicts"].empty());
  CHECK(j["max_weight"] == 20);
  std::vector<std::pair<int, int>> pairs;
  for (const auto& w : j["witnesses"]) pairs.emplace_back(w[0], w[1]);
  auto has = [&](int a, int b) {
    return std::find(pairs.begin(), pairs.end(), std::make_pair(a, b)) !=
           pairs.end();
  };
  CHECK(has(2, 5));
  CHECK(has(5, 8));
  CHECK(has(9, 11));
  CHECK(has(6, 13));
}

TEST_CASE("every shipped scenario still matches its golden trace") {
  for (const char* name : kAllScenarios) {
    CAPTURE(name);
    CliResult r = run_cli("run --scenario " + scenario(name) + " --golden " +
                          golden(name));
    CHECK(r.code == 0);
    CHECK(r.out.find("trace matches golden") != std::string::npos);
  }
}

TEST_CASE("a divergent golden is reported with its generation") {
  std::string text = slurp(golden("scheme8"));
  auto pos = text.find("(1)-12=B");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, 8, "(1)-12=R");
  fs::path bad = scratch_file("bad_golden.txt");
  std::ofstream(bad) << text;
  CliResult r = run_cli("run --scenario " + scenario("scheme8") + " --golden " +
                        bad.string());
  CHECK(r.code == 1);
  CHECK(r.out.find("diverges from golden at generation 0") !=
        std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("run").code == 2);
  CHECK(run_cli("run --scenario /nonexistent.scn").code == 2);
  CHECK(run_cli("simulate-circuit --circuit nosuch").code == 2);
  CHECK(run_cli("render --scenario " + scenario("stab_fix0") +
                " --radius 9").code == 2);
  CHECK(run_cli("render --scenario " + scenario("stab_fix0") +
                " --generation 99").code == 2);
}

TEST_CASE("rendering is deterministic byte for byte") {
  std::string args = "render --scenario " + scenario("stab_fix0") +
                     " --generation 3";
  CliResult a = run_cli(args);
  CliResult b = run_cli(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("<svg") != std::string::npos);

  CliResult v = run_cli(args + " --projection v");
  REQUIRE(v.code == 0);
  CHECK(v.out != a.out);
}

TEST_CASE("rendered cells agree with the trace for both projections") {
  std::istringstream g(slurp(golden("fmvtracks")));
  std::vector<std::string> lines;
  for (std::string l; std::getline(g, l);) lines.push_back(l);
  REQUIRE(lines.size() == 11);
  for (const char* proj : {"h", "v"}) {
    for (std::size_t gen : {std::size_t(0), lines.size() - 1}) {
      CliResult r = run_cli("render --scenario " + scenario("fmvtracks") +
                            " --generation " + std::to_string(gen) +
                            " --projection " + proj);
      REQUIRE(r.code == 0);
      auto got = svg_cell_states(r.out);
      std::vector<std::string> want;
      std::istringstream ls(lines[gen]);
      std::string tok;
      ls >> tok;  // generation number
      while (ls >> tok) want.push_back(tok);
      std::vector<std::string> have;
      for (const auto& [cell, st] : got) have.push_back(cell + "=" + st);
      std::sort(have.begin(), have.end());
      std::sort(want.begin(), want.end());
      CAPTURE(proj);
      CAPTURE(gen);
      CHECK(have == want);
    }
  }
}

TEST_CASE("build writes a loadable configuration") {
  fs::path dump = scratch_file("build_dump.txt");
  CliResult r = run_cli("build --scenario " + scenario("track12") + " --out " +
                        dump.string());
  REQUIRE(r.code == 0);
  Chart ch;
  Configuration cfg;
  std::ifstream in(dump);
  cfg.load(in, ch);
  // The dump is the initial configuration, generation 0 of the golden trace.
  std::istringstream g(slurp(golden("track12")));
  std::string line0;
  std::getline(g, line0);
  std::istringstream ls(line0);
  std::string tok;
  ls >> tok;
  std::size_t cells = 0;
  while (ls >> tok) ++cells;
  CHECK(cfg.population() == cells);
}

TEST_CASE("flipflop circuit alternates exits across passages") {
  CliResult r =
      run_cli("simulate-circuit --circuit flipflop --quiet"
              " --inject sw.in --inject sw.in --inject sw.in");
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::vector<std::string> exits;
  for (std::string l; std::getline(in, l);)
    if (l.find("sw.out") != std::string::npos)
      exits.push_back(l.substr(l.find("sw.out")));
  REQUIRE(exits.size() == 3);
  CHECK(exits[0] == "sw.out0.in");
  CHECK(exits[1] == "sw.out1.in");
  CHECK(exits[2] == "sw.out0.in");
}

TEST_CASE("machine cosimulation agrees with the oracle") {
  CliResult r = run_cli("simulate-machine --program " + root() +
                        "/data/programs/add.rm --inputs 2,3 --cosim");
  CHECK(r.code == 0);
  CHECK(r.out.find("verdict: equal") != std::string::npos);

  CliResult plain = run_cli("simulate-machine --program " + root() +
                            "/data/programs/add.rm --inputs 2,3");
  CHECK(plain.code == 0);
  CHECK(plain.out.find("registers: 5 0") != std::string::npos);
  CHECK(plain.out.find("halted: yes") != std::string::npos);
}

TEST_CASE("compare_trace finds the first divergent generation") {
  CHECK(compare_trace("0 a=B\n1 a=R\n", "0 a=B\n1 a=R\n") == -1);
  CHECK(compare_trace("0 a=B\n1 a=R\n", "0 a=B\n1 a=G\n") == 1);
  CHECK(compare_trace("0 a=B\n", "0 a=B\n1 a=R\n") == 1);
  CHECK(compare_trace("0 a=B\n1 a=R\n", "0 a=B\n") == 1);
  CHECK(compare_trace("0 a=B\r\n1 a=R\n", "0 a=B\n1 a=R\n") == -1);
}
