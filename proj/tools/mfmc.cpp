#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "mfm/dsl.hpp"
#include "mfm/plan.hpp"
#include "mfm/propagate.hpp"
#include "mfm/translate.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNoPlan = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw InputError(out_path + ": cannot open for writing");
  out << text;
}

// Shared per-subcommand inputs; each subcommand registers the flags it uses.
struct Options {
  std::string model_path;
  std::string rules_path;
  std::string actions_path;
  std::string goal_text;
  std::string plan_path;
  int max_actions = 5;
  std::string format;
  std::string out_path;
};

mfm::MfmModel load_model(const Options& o) {
  try {
    return mfm::parse_model(read_file(o.model_path));
  } catch (const mfm::ParseError& e) {
    throw InputError(o.model_path + ":" + e.what());
  }
}

std::vector<mfm::RuleSource> load_rules(const Options& o) {
  if (o.rules_path.empty()) return {};
  try {
    return mfm::parse_rules(read_file(o.rules_path));
  } catch (const mfm::ParseError& e) {
    throw InputError(o.rules_path + ":" + e.what());
  }
}

std::vector<mfm::ActionSource> load_actions(const Options& o) {
  if (o.actions_path.empty()) return {};
  try {
    return mfm::parse_actions(read_file(o.actions_path));
  } catch (const mfm::ParseError& e) {
    throw InputError(o.actions_path + ":" + e.what());
  }
}

mfm::Atom parse_goal(const Options& o) {
  mfm::Atom goal = mfm::parse_atom(o.goal_text);
  if (goal.predicate != "hold" || goal.args.size() != 2 || !goal.is_ground())
    throw InputError("goal must be a ground binary hold atom, got '" +
                     o.goal_text + "'");
  return goal;
}

int run_translate(const Options& o) {
  mfm::ClauseSet cs =
      mfm::make_clause_set(load_model(o), load_rules(o), load_actions(o));
  std::string text;
  if (o.format == "json-lines") {
    std::ostringstream os;
    for (const mfm::Atom& a : cs.facts.atoms())
      os << json{{"type", "fact"}, {"atom", to_string(a)}} << "\n";
    for (const mfm::HornRule& r : cs.propagation_rules) {
      json ante = json::array();
      for (const mfm::Atom& a : r.antecedents) ante.push_back(to_string(a));
      os << json{{"type", "rule"},
                 {"name", r.name},
                 {"antecedents", ante},
                 {"consequent", to_string(r.consequent)}}
         << "\n";
    }
    for (const mfm::ActionRule& ar : cs.action_rules) {
      json ante = json::array();
      for (const mfm::Atom& a : ar.rule.antecedents) ante.push_back(to_string(a));
      os << json{{"type", "abducible"}, {"action", to_string(ar.action)}} << "\n";
      os << json{{"type", "rule"},
                 {"name", ar.rule.name},
                 {"antecedents", ante},
                 {"consequent", to_string(ar.rule.consequent)}}
         << "\n";
    }
    text = os.str();
  } else {
    text = mfm::emit_clauses(cs);
  }
  write_output(o.out_path, text);
  return kExitOk;
}

int run_propagate(const Options& o) {
  mfm::ClauseSet cs = mfm::make_clause_set(load_model(o), load_rules(o), {});
  mfm::PropagationResult r =
      mfm::forward_propagate(cs.facts, cs.propagation_rules);
  std::ostringstream os;
  if (o.format == "json-lines") {
    for (const mfm::Atom& a : r.derived)
      os << json{{"type", "derived"}, {"atom", to_string(a)}} << "\n";
    for (const mfm::StateConflict& c : r.conflicts)
      os << json{{"type", "conflict"},
                 {"vertex", c.vertex},
                 {"states", {c.state_a, c.state_b}}}
         << "\n";
  } else {
    for (const mfm::Atom& a : r.derived) os << to_string(a) << "\n";
    for (const mfm::StateConflict& c : r.conflicts)
      os << "conflict(" << c.vertex << "," << c.state_a << "," << c.state_b
         << ")\n";
  }
  write_output(o.out_path, os.str());
  return kExitOk;
}

int run_plan(const Options& o) {
  mfm::PlanProblem problem{
      mfm::make_clause_set(load_model(o), load_rules(o), load_actions(o)),
      parse_goal(o), o.max_actions};
  mfm::PlanResult result = mfm::abduce_plan(problem);
  if (!result.plan) {
    if (o.format == "json-lines") {
      std::ostringstream os;
      os << json{{"type", "no-plan"},
                 {"max_actions", o.max_actions},
                 {"nodes_expanded", result.stats.nodes_expanded}}
         << "\n";
      write_output(o.out_path, os.str());
    } else {
      std::cerr << "no plan within " << o.max_actions << " actions\n";
    }
    return kExitNoPlan;
  }
  std::ostringstream os;
  if (o.format == "dot") {
    os << mfm::to_dot(*result.plan);
  } else if (o.format == "json-lines") {
    int i = 0;
    for (const mfm::Atom& a : result.plan->action_order)
      os << json{{"type", "action"}, {"index", i++}, {"atom", to_string(a)}}
         << "\n";
  } else {
    for (const mfm::Atom& a : result.plan->action_order)
      os << to_string(a) << "\n";
  }
  write_output(o.out_path, os.str());
  return kExitOk;
}

int run_validate(const Options& o) {
  mfm::PlanProblem problem{
      mfm::make_clause_set(load_model(o), load_rules(o), load_actions(o)),
      parse_goal(o), o.max_actions};
  std::vector<mfm::Atom> actions;
  std::istringstream lines(read_file(o.plan_path));
  std::string line;
  int lineno = 0;
  while (std::getline(lines, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      actions.push_back(mfm::parse_atom(line));
    } catch (const mfm::Error& e) {
      throw InputError(o.plan_path + ":" + std::to_string(lineno) + ": " +
                       e.what());
    }
  }
  mfm::ReplayResult r = mfm::replay_actions(problem.clause_set, actions,
                                            problem.goal);
  std::ostringstream os;
  if (o.format == "json-lines") {
    os << json{{"type", "validation"}, {"ok", r.ok}} << "\n";
    for (const std::string& d : r.diagnostics)
      os << json{{"type", "diagnostic"}, {"message", d}} << "\n";
  } else {
    os << (r.ok ? "valid" : "invalid") << "\n";
    for (const std::string& d : r.diagnostics) os << d << "\n";
  }
  write_output(o.out_path, os.str());
  return r.ok ? kExitOk : kExitNoPlan;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MFM model compiler: translation, propagation, and planning "
               "over Horn clauses"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* cmd, bool actions, bool goal,
                        std::vector<std::string> formats,
                        const std::string& default_format) {
    cmd->add_option("--model", o.model_path, "MFM model file")
        ->required();
    cmd->add_option("--rules", o.rules_path, "propagation rules file");
    if (actions) cmd->add_option("--actions", o.actions_path, "actions file");
    if (goal)
      cmd->add_option("--goal", o.goal_text, "ground hold atom, e.g. "
                                             "hold(Pipe1,High)")
          ->required();
    o.format = default_format;
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember(formats))
        ->default_val(default_format);
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
  };

  CLI::App* translate = app.add_subcommand(
      "translate", "compile model, rules, and actions to clauses");
  add_common(translate, true, false, {"clauses", "json-lines"}, "clauses");

  CLI::App* propagate = app.add_subcommand(
      "propagate", "forward-propagate states to fixpoint");
  add_common(propagate, false, false, {"text", "json-lines"}, "text");

  CLI::App* plan =
      app.add_subcommand("plan", "abduce an action sequence for a goal");
  add_common(plan, true, true, {"text", "dot", "json-lines"}, "text");
  plan->add_option("--max-actions", o.max_actions, "action budget")
      ->default_val(5)
      ->check(CLI::PositiveNumber);

  CLI::App* validate =
      app.add_subcommand("validate", "replay a plan file against a goal");
  add_common(validate, true, true, {"text", "json-lines"}, "text");
  validate
      ->add_option("--plan", o.plan_path, "plan file, one action per line")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitInputError : kExitOk;
  }

  try {
    if (app.got_subcommand(translate)) return run_translate(o);
    if (app.got_subcommand(propagate)) return run_propagate(o);
    if (app.got_subcommand(plan)) return run_plan(o);
    if (app.got_subcommand(validate)) return run_validate(o);
  } catch (const InputError& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  } catch (const mfm::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
