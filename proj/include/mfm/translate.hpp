#pragma once

#include <string>
#include <vector>

#include "mfm/dsl.hpp"
#include "mfm/fol.hpp"
#include "mfm/model.hpp"

namespace mfm {

/// Ground atoms describing one model at one time point. Atoms are kept
/// sorted and unique; at most one hold(V, S) per vertex V.
class FactBase {
 public:
  FactBase() = default;

  // Sorts, deduplicates, and checks the invariants (groundness, hold
  // exclusivity). Throws MalformedClauseSet / StateExclusivity.
  static FactBase from_atoms(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::vector<Atom> structure_atoms() const;  // everything but hold
  std::vector<Atom> state_atoms() const;      // the hold atoms
  bool contains(const Atom& a) const;
  std::size_t size() const { return atoms_.size(); }

  auto operator<=>(const FactBase&) const = default;

 private:
  std::vector<Atom> atoms_;
};

/// Compiled action: the abducible action atom plus the Horn rule whose first
/// antecedent it is.
struct ActionRule {
  Atom action;
  HornRule rule;

  auto operator<=>(const ActionRule&) const = default;
};

struct ClauseSet {
  FactBase facts;
  std::vector<HornRule> propagation_rules;
  std::vector<ActionRule> action_rules;

  auto operator<=>(const ClauseSet&) const = default;
};

// Per-element translation scheme. Atom order is pinned: f before hold for a
// vertex, flow before the relation atom for an edge, vertices before edges
// for a pattern. FactBase construction re-sorts, but rule antecedents keep
// this order.
std::vector<Atom> translate_vertex(const Vertex& v);
std::vector<Atom> translate_edge(const Edge& e);
FactBase translate_model(const MfmModel& m);
std::vector<Atom> translate_pattern(const MfmModel& p);

// One Horn rule per effect; multi-effect rules get _1, _2, ... name
// suffixes.
std::vector<HornRule> translate_rule(const RuleSource& r);
ActionRule translate_action(const ActionSource& a);

/// Bundles the translations and checks the whole-set invariants: rule names
/// unique, every rule range-restricted, one arity per predicate.
ClauseSet make_clause_set(const MfmModel& model,
                          const std::vector<RuleSource>& rules,
                          const std::vector<ActionSource>& actions);

/// Textual clause form, one clause per line, lines sorted lexicographically:
/// `atom.` for facts, `head :- a1, a2.` for rules, `abducible act(v).` per
/// action.
std::string emit_clauses(const ClauseSet& cs);

}  // namespace mfm
