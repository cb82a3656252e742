#pragma once

#include <set>
#include <string>
#include <vector>

#include "mfm/fol.hpp"
#include "mfm/translate.hpp"

namespace mfm {

/// One rule application: which rule, under which substitution, producing
/// which atom. Replaying the steps in order regenerates the derived set.
struct TraceStep {
  std::string rule;
  Substitution subst;
  Atom atom;

  auto operator<=>(const TraceStep&) const = default;
};

/// Vertex assigned two distinct states somewhere in facts + derived. States
/// are stored in lexicographic order.
struct StateConflict {
  std::string vertex;
  std::string state_a;
  std::string state_b;

  auto operator<=>(const StateConflict&) const = default;
};

struct PropagationResult {
  std::set<Atom> derived;  // fixpoint minus the initial facts
  std::vector<StateConflict> conflicts;  // sorted, unique
  std::vector<TraceStep> trace;
};

struct PropagateOptions {
  bool parallel = true;  // rule matching runs under OpenMP when available
};

/// Least fixpoint of the rules over the facts. Conflicts are reported, not
/// fatal; conflicting atoms keep propagating. The result is identical for
/// parallel and serial evaluation.
PropagationResult forward_propagate(const FactBase& facts,
                                    const std::vector<HornRule>& rules,
                                    PropagateOptions opts = {});

bool entails(const FactBase& facts, const std::vector<HornRule>& rules,
             const Atom& goal);

}  // namespace mfm
