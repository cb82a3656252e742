#include "mfm/translate.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace mfm {

FactBase FactBase::from_atoms(std::vector<Atom> atoms) {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  std::map<std::string, const Atom*> hold_by_vertex;
  for (const Atom& a : atoms) {
    if (!a.is_ground())
      throw Error(ErrorCode::MalformedClauseSet,
                  "fact is not ground: " + to_string(a));
    if (a.predicate == "hold") {
      if (a.args.size() != 2)
        throw Error(ErrorCode::MalformedClauseSet,
                    "hold must be binary: " + to_string(a));
      auto [it, inserted] = hold_by_vertex.emplace(a.args[0].name, &a);
      if (!inserted)
        throw Error(ErrorCode::StateExclusivity,
                    "vertex " + a.args[0].name + " holds two states: " +
                        to_string(*it->second) + " and " + to_string(a));
    }
  }
  FactBase fb;
  fb.atoms_ = std::move(atoms);
  return fb;
}

std::vector<Atom> FactBase::structure_atoms() const {
  std::vector<Atom> out;
  for (const Atom& a : atoms_)
    if (a.predicate != "hold") out.push_back(a);
  return out;
}

std::vector<Atom> FactBase::state_atoms() const {
  std::vector<Atom> out;
  for (const Atom& a : atoms_)
    if (a.predicate == "hold") out.push_back(a);
  return out;
}

bool FactBase::contains(const Atom& a) const {
  return std::binary_search(atoms_.begin(), atoms_.end(), a);
}

std::vector<Atom> translate_vertex(const Vertex& v) {
  Term name = Term::constant(v.name);
  std::vector<Atom> out;
  out.push_back(Atom{v.function.label, {name}});
  if (v.state)
    out.push_back(Atom{"hold", {name, Term::constant(v.state->label)}});
  return out;
}

std::vector<Atom> translate_edge(const Edge& e) {
  Term from = Term::constant(e.from);
  Term to = Term::constant(e.to);
  std::vector<Atom> out;
  if (e.carries_flow) out.push_back(Atom{"flow", {from, to}});
  out.push_back(Atom{e.relation.label, {from, to}});
  return out;
}

FactBase translate_model(const MfmModel& m) {
  std::vector<Atom> atoms;
  for (const Vertex& v : m.vertices)
    for (Atom& a : translate_vertex(v)) atoms.push_back(std::move(a));
  for (const Edge& e : m.edges)
    for (Atom& a : translate_edge(e)) atoms.push_back(std::move(a));
  return FactBase::from_atoms(std::move(atoms));
}

std::vector<Atom> translate_pattern(const MfmModel& p) {
  std::vector<Atom> out;
  for (const Vertex& v : p.vertices) {
    if (v.state)
      throw Error(ErrorCode::StatefulPattern,
                  "pattern vertex '" + v.name + "' carries a state");
    if (!is_lower_identifier(v.name))
      throw Error(ErrorCode::InvalidIdentifier,
                  "pattern vertex must be a variable: '" + v.name + "'");
    out.push_back(Atom{v.function.label, {Term::variable(v.name)}});
  }
  for (const Edge& e : p.edges) {
    Term from = Term::variable(e.from);
    Term to = Term::variable(e.to);
    if (e.carries_flow) out.push_back(Atom{"flow", {from, to}});
    out.push_back(Atom{e.relation.label, {from, to}});
  }
  return out;
}

std::vector<HornRule> translate_rule(const RuleSource& r) {
  std::vector<Atom> body = translate_pattern(r.pattern);
  body.push_back(Atom{"hold",
                      {Term::variable(r.cause.first),
                       Term::constant(r.cause.second.label)}});
  std::vector<HornRule> out;
  for (std::size_t i = 0; i < r.effects.size(); ++i) {
    const auto& [var, state] = r.effects[i];
    HornRule rule;
    rule.name = r.effects.size() == 1 ? r.name
                                      : r.name + "_" + std::to_string(i + 1);
    rule.antecedents = body;
    rule.consequent =
        Atom{"hold", {Term::variable(var), Term::constant(state.label)}};
    out.push_back(std::move(rule));
  }
  return out;
}

ActionRule translate_action(const ActionSource& a) {
  Atom head{a.name, {}};
  for (const std::string& p : a.params) head.args.push_back(Term::variable(p));
  HornRule rule;
  rule.name = a.name;
  rule.antecedents.push_back(head);
  for (const Atom& pre : a.preconditions) rule.antecedents.push_back(pre);
  rule.consequent = a.effect;
  return ActionRule{std::move(head), std::move(rule)};
}

namespace {

void record_signature(std::map<std::string, std::size_t>& table, const Atom& a,
                      const std::string& where) {
  auto [it, inserted] = table.emplace(a.predicate, a.args.size());
  if (!inserted && it->second != a.args.size())
    throw Error(ErrorCode::SignatureMismatch,
                "predicate " + a.predicate + " used with arity " +
                    std::to_string(a.args.size()) + " and " +
                    std::to_string(it->second) + " (in " + where + ")");
}

void check_rule(std::map<std::string, std::size_t>& table,
                std::set<std::string>& names, const HornRule& rule) {
  if (!names.insert(rule.name).second)
    throw Error(ErrorCode::MalformedClauseSet,
                "rule name '" + rule.name + "' used twice");
  if (!rule.range_restricted())
    throw Error(ErrorCode::NotRangeRestricted,
                "rule " + rule.name + " is not range-restricted");
  for (const Atom& a : rule.antecedents) record_signature(table, a, rule.name);
  record_signature(table, rule.consequent, rule.name);
}

}  // namespace

ClauseSet make_clause_set(const MfmModel& model,
                          const std::vector<RuleSource>& rules,
                          const std::vector<ActionSource>& actions) {
  ClauseSet cs;
  cs.facts = translate_model(model);
  for (const RuleSource& r : rules)
    for (HornRule& h : translate_rule(r)) cs.propagation_rules.push_back(std::move(h));
  for (const ActionSource& a : actions)
    cs.action_rules.push_back(translate_action(a));

  std::map<std::string, std::size_t> table;
  std::set<std::string> names;
  for (const Atom& a : cs.facts.atoms()) record_signature(table, a, "facts");
  for (const HornRule& r : cs.propagation_rules) check_rule(table, names, r);
  for (const ActionRule& ar : cs.action_rules) check_rule(table, names, ar.rule);
  return cs;
}

std::string emit_clauses(const ClauseSet& cs) {
  std::vector<std::string> lines;
  for (const Atom& a : cs.facts.atoms()) lines.push_back(to_string(a) + ".");
  for (const HornRule& r : cs.propagation_rules)
    lines.push_back(to_string(r) + ".");
  for (const ActionRule& ar : cs.action_rules) {
    lines.push_back("abducible " + to_string(ar.action) + ".");
    lines.push_back(to_string(ar.rule) + ".");
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += '\n';
  }
  return out;
}

}  // namespace mfm
