#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mfm/error.hpp"
#include "mfm/fol.hpp"
#include "mfm/model.hpp"

namespace mfm {

struct SourcePos {
  int line = 0;
  int column = 0;
};

/// Parse failure with a position inside the input. For syntax errors the
/// expected() list names the tokens that would have been accepted.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, SourcePos pos, const std::string& message,
             std::vector<std::string> expected = {});

  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  SourcePos pos_;
  std::vector<std::string> expected_;
};

/// Influence propagation rule as written: a stateless pattern over variable
/// vertices, one cause and one or more effects, each naming a pattern vertex
/// and a state.
struct RuleSource {
  std::string name;
  MfmModel pattern;
  std::pair<std::string, StateLabel> cause;
  std::vector<std::pair<std::string, StateLabel>> effects;

  auto operator<=>(const RuleSource&) const = default;
};

/// Operator schema: name, parameter variables, precondition atoms and a
/// single hold effect.
struct ActionSource {
  std::string name;
  std::vector<std::string> params;
  std::vector<Atom> preconditions;
  Atom effect;

  auto operator<=>(const ActionSource&) const = default;
};

/// Planning task: which model to start from, the ground hold goal, and the
/// action budget.
struct ProblemSource {
  std::string model_ref;
  Atom goal;
  int max_actions = 5;

  auto operator<=>(const ProblemSource&) const = default;
};

struct Document {
  std::vector<MfmModel> models;
  std::vector<RuleSource> rules;
  std::vector<ActionSource> actions;
  std::vector<ProblemSource> problems;

  auto operator<=>(const Document&) const = default;
};

// Each parser consumes an entire `.mfm` stream (UTF-8, `#` line comments).
// The registry overloads record every function/relation label encountered so
// later validate(model, registry) calls accept the parsed vocabulary.
Document parse_document(std::string_view text);
Document parse_document(std::string_view text, TypeRegistry& registry);

// Restricted entry points: the stream must contain only the named construct
// (exactly one for model/problem).
MfmModel parse_model(std::string_view text);
MfmModel parse_model(std::string_view text, TypeRegistry& registry);
std::vector<RuleSource> parse_rules(std::string_view text);
std::vector<RuleSource> parse_rules(std::string_view text, TypeRegistry& registry);
std::vector<ActionSource> parse_actions(std::string_view text);
ProblemSource parse_problem(std::string_view text);

// Canonical pretty-printers; print(parse(text)) reparses to an equal value.
std::string print_model(const MfmModel& m);
std::string print_rule(const RuleSource& r);
std::string print_rules(const std::vector<RuleSource>& rules);
std::string print_action(const ActionSource& a);
std::string print_actions(const std::vector<ActionSource>& actions);
std::string print_problem(const ProblemSource& p);
std::string print_document(const Document& d);

}  // namespace mfm
