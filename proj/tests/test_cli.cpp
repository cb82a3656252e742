#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "mfm/dsl.hpp"
#include "mfm/translate.hpp"
#include "support/fixtures.hpp"
#include "support/process.hpp"

using testutil::fixture;
using testutil::fixture_text;
using Run = testutil::RunResult;

namespace {

// Runs the binary with stderr folded into stdout.
Run cli(const std::string& args) {
  Run r = testutil::run_command(std::string(MFMC_BIN) + " " + args + " 2>&1");
  REQUIRE(r.code != -1);
  return r;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path.string();
}

std::string q(const std::string& s) { return "'" + s + "'"; }

}  // namespace

TEST_CASE("cli translate emits the clause text") {
  mfm::ClauseSet cs = mfm::make_clause_set(
      mfm::parse_model(fixture_text("toyplant.mfm")),
      mfm::parse_rules(fixture_text("rules_flow.mfm")),
      mfm::parse_actions(fixture_text("actions_open.mfm")));

  Run r = cli("translate --model " + q(fixture("toyplant.mfm")) + " --rules " +
              q(fixture("rules_flow.mfm")) + " --actions " + q(fixture("actions_open.mfm")));
  CHECK(r.code == 0);
  CHECK(r.out == mfm::emit_clauses(cs));
}

TEST_CASE("cli translate json-lines carries every clause") {
  Run r = cli("translate --format json-lines --model " + q(fixture("toyplant.mfm")) +
              " --rules " + q(fixture("rules_flow.mfm")) + " --actions " +
              q(fixture("actions_open.mfm")));
  CHECK(r.code == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 11);  // 6 facts + 3 rules + abducible and rule per action
  CHECK(r.out.find("\"type\":\"fact\"") != std::string::npos);
  CHECK(r.out.find("\"type\":\"rule\"") != std::string::npos);
  CHECK(r.out.find("\"type\":\"abducible\"") != std::string::npos);
  CHECK(r.out.find("\"atom\":\"flow(Faucet1,Pipe1)\"") != std::string::npos);
}

TEST_CASE("cli propagate prints derived atoms and conflicts") {
  Run settled = cli("propagate --model " + q(fixture("toyplant.mfm")) + " --rules " +
                    q(fixture("rules_flow.mfm")));
  CHECK(settled.code == 0);
  CHECK(settled.out.empty());

  std::string contested = temp_file(
      "mfmc_cli_contested.mfm",
      "model Plant {\n  vertex Faucet1: source state High;\n"
      "  vertex Pipe1: transport state No;\n"
      "  edge Faucet1 -> Pipe1: influencer flow;\n}\n");
  Run r = cli("propagate --model " + q(contested) + " --rules " + q(fixture("rules_flow.mfm")));
  CHECK(r.code == 0);
  CHECK(r.out == "hold(Pipe1,High)\nconflict(Pipe1,High,No)\n");

  Run j = cli("propagate --format json-lines --model " + q(contested) + " --rules " +
              q(fixture("rules_flow.mfm")));
  CHECK(j.code == 0);
  CHECK(j.out.find("\"type\":\"derived\"") != std::string::npos);
  CHECK(j.out.find("\"type\":\"conflict\"") != std::string::npos);
  CHECK(j.out.find("\"vertex\":\"Pipe1\"") != std::string::npos);
}

TEST_CASE("cli plan prints the action sequence") {
  std::string base = "plan --model " + q(fixture("toyplant.mfm")) + " --rules " +
                     q(fixture("rules_flow.mfm")) + " --actions " +
                     q(fixture("actions_open.mfm")) + " --goal 'hold(Pipe1,High)'";
  Run r = cli(base);
  CHECK(r.code == 0);
  CHECK(r.out == "open(Faucet1)\n");

  Run again = cli(base);
  CHECK(again.out == r.out);  // byte-identical across runs

  Run dot = cli(base + " --format dot");
  CHECK(dot.code == 0);
  CHECK(dot.out.find("digraph plan") != std::string::npos);
  CHECK(dot.out.find("hexagon") != std::string::npos);

  Run j = cli(base + " --format json-lines");
  CHECK(j.code == 0);
  CHECK(j.out == "{\"atom\":\"open(Faucet1)\",\"index\":0,\"type\":\"action\"}\n");
}

TEST_CASE("cli plan reports exhaustion with exit code 1") {
  std::string base = "plan --model " + q(fixture("toyplant_low.mfm")) + " --rules " +
                     q(fixture("rules_flow.mfm")) + " --actions " +
                     q(fixture("actions_open_close.mfm")) + " --goal 'hold(Pipe1,High)'";
  Run ok = cli(base);
  CHECK(ok.code == 0);
  CHECK(ok.out == "close(Faucet1)\nopen(Faucet1)\n");

  Run tight = cli(base + " --max-actions 1");
  CHECK(tight.code == 1);
  CHECK(tight.out.find("no plan within 1 actions") != std::string::npos);

  Run jtight = cli(base + " --max-actions 1 --format json-lines");
  CHECK(jtight.code == 1);
  CHECK(jtight.out.find("\"type\":\"no-plan\"") != std::string::npos);
  CHECK(jtight.out.find("\"max_actions\":1") != std::string::npos);
}

TEST_CASE("cli validate replays a plan file") {
  std::string good = temp_file("mfmc_cli_good.plan", "close(Faucet1)\nopen(Faucet1)\n");
  std::string bad = temp_file("mfmc_cli_bad.plan", "open(Faucet1)\nclose(Faucet1)\n");
  std::string base = "validate --model " + q(fixture("toyplant_low.mfm")) + " --rules " +
                     q(fixture("rules_flow.mfm")) + " --actions " +
                     q(fixture("actions_open_close.mfm")) + " --goal 'hold(Pipe1,High)'";

  Run ok = cli(base + " --plan " + q(good));
  CHECK(ok.code == 0);
  CHECK(ok.out == "valid\n");

  Run fail = cli(base + " --plan " + q(bad));
  CHECK(fail.code == 1);
  CHECK(fail.out.find("invalid") == 0);
  CHECK(fail.out.find("precondition") != std::string::npos);

  std::string garbage = temp_file("mfmc_cli_garbage.plan", "open(((\n");
  Run syn = cli(base + " --plan " + q(garbage));
  CHECK(syn.code == 2);

  Run jfail = cli(base + " --plan " + q(bad) + " --format json-lines");
  CHECK(jfail.code == 1);
  CHECK(jfail.out.find("{\"ok\":false,\"type\":\"validation\"}") == 0);
}

TEST_CASE("cli writes to --out instead of stdout") {
  auto out_path = std::filesystem::temp_directory_path() / "mfmc_cli_plan_out.txt";
  std::filesystem::remove(out_path);
  Run r = cli("plan --model " + q(fixture("toyplant.mfm")) + " --rules " +
              q(fixture("rules_flow.mfm")) + " --actions " + q(fixture("actions_open.mfm")) +
              " --goal 'hold(Pipe1,High)' --out " + q(out_path.string()));
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(testutil::read_file(out_path.string()) == "open(Faucet1)\n");
}

TEST_CASE("cli rejects bad invocations with exit code 2") {
  CHECK(cli("plan --rules " + q(fixture("rules_flow.mfm")) + " --goal 'hold(A,B)'").code == 2);
  CHECK(cli("nonsense").code == 2);

  std::string broken = temp_file("mfmc_cli_broken.mfm", "model Plant { vertex tank }");
  Run parse = cli("translate --model " + q(broken));
  CHECK(parse.code == 2);
  CHECK(parse.out.find("mfmc_cli_broken.mfm") != std::string::npos);

  Run fmt = cli("translate --model " + q(fixture("toyplant.mfm")) + " --format yaml");
  CHECK(fmt.code == 2);

  Run goal = cli("plan --model " + q(fixture("toyplant.mfm")) + " --rules " +
                 q(fixture("rules_flow.mfm")) + " --actions " + q(fixture("actions_open.mfm")) +
                 " --goal 'hold(v,High)'");
  CHECK(goal.code == 2);
  CHECK(goal.out.find("ground") != std::string::npos);

  Run mixed = cli("translate --model " + q(fixture("chain3.mfm")));
  CHECK(mixed.code == 2);

  Run missing = cli("translate --model /nonexistent/path.mfm");
  CHECK(missing.code == 2);
  CHECK(missing.out.find("cannot open") != std::string::npos);

  Run help = cli("--help");
  CHECK(help.code == 0);
  CHECK(help.out.find("translate") != std::string::npos);
}
