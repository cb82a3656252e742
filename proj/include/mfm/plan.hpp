#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mfm/fol.hpp"
#include "mfm/translate.hpp"

namespace mfm {

/// goal: the root; fact: leaf whose atom is an initial fact; action: leaf for
/// an abduced action atom; subgoal: internal node concluded by one rule.
enum class NodeKind { Goal, Fact, Action, Subgoal };

std::string to_string(NodeKind k);

struct PlanNode {
  int id = 0;
  NodeKind kind = NodeKind::Subgoal;
  Atom atom;

  auto operator<=>(const PlanNode&) const = default;
};

/// One applied rule: premises justify the conclusion. subst maps the named
/// rule's own variables; "init" marks the fact justification of the goal.
struct HyperEdge {
  std::string rule;
  Substitution subst;
  std::vector<int> premises;
  int conclusion = 0;

  auto operator<=>(const HyperEdge&) const = default;
};

struct PlanGraph {
  std::vector<PlanNode> nodes;  // ids are preorder positions
  std::vector<HyperEdge> edges;
  std::vector<Atom> action_order;  // validated topological linearization

  auto operator<=>(const PlanGraph&) const = default;
};

struct PlanProblem {
  ClauseSet clause_set;
  Atom goal;  // ground hold atom
  int max_actions = 5;
};

/// Exhaustion certificate: how far the search went. On no-plan,
/// action_bound_reached equals max_actions.
struct SearchStats {
  int action_bound_reached = 0;
  int max_depth = 0;
  std::uint64_t nodes_expanded = 0;
  std::uint64_t trees_found = 0;     // complete justification trees tested
  std::uint64_t trees_rejected = 0;  // trees whose every linearization failed replay
};

struct PlanResult {
  std::optional<PlanGraph> plan;
  SearchStats stats;
};

/// Iterative deepening on action count, depth-first abduction within each
/// budget, candidate order facts, propagation rules, action rules. Every
/// candidate tree is checked by replay before being returned, so returned
/// plans always validate.
PlanResult abduce_plan(const PlanProblem& p);

struct ReplayResult {
  bool ok = false;
  std::vector<std::string> diagnostics;
  std::set<Atom> final_state;
};

/// Simulates the action sequence: settle the initial facts by forward
/// propagation (a vertex's freshly derived state replaces its old one, two
/// distinct derived states fail the replay), then per action check its
/// preconditions, apply its effect, settle again. ok iff every step fires
/// and the goal holds at the end.
ReplayResult replay_actions(const ClauseSet& cs, const std::vector<Atom>& actions,
                            const Atom& goal);

struct ValidationReport {
  bool ok = false;
  std::vector<std::string> diagnostics;
  std::set<Atom> final_state;
};

/// Structural well-formedness of the graph (acyclicity, justification
/// uniqueness, fact grounding, rule applications consistent, action_order a
/// linearization) plus replay of action_order. ok iff both hold.
ValidationReport validate_plan(const PlanProblem& p, const PlanGraph& g);

/// Canonical linearization: action A precedes B when A's effect feeds B's
/// preconditions; ties broken lexicographically by atom text.
std::vector<Atom> extract_action_sequence(const PlanGraph& g);

std::string to_dot(const PlanGraph& g);

}  // namespace mfm
