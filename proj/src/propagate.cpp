#include "mfm/propagate.hpp"

#include <algorithm>
#include <cstdint>
#include <map>

namespace mfm {

namespace {

struct Candidate {
  Substitution subst;
  Atom atom;
};

// Index of the known atoms by predicate; set iteration keeps atoms sorted,
// so join order is deterministic.
using PredIndex = std::map<std::string, std::vector<Atom>>;

// Extends subst by matching every antecedent except the pivot against the
// known atoms, positions in increasing order. Complete matches append the
// instantiated consequent to out.
void join_rest(const HornRule& rule, std::size_t pivot, std::size_t pos,
               const Substitution& subst, const PredIndex& index,
               std::vector<Candidate>& out) {
  if (pos == rule.antecedents.size()) {
    out.push_back({subst, apply_substitution(rule.consequent, subst)});
    return;
  }
  if (pos == pivot) {
    join_rest(rule, pivot, pos + 1, subst, index, out);
    return;
  }
  auto it = index.find(rule.antecedents[pos].predicate);
  if (it == index.end()) return;
  Atom resolved = apply_substitution(rule.antecedents[pos], subst);
  if (resolved.is_ground()) {
    // Buckets stay sorted (set iteration order), so a ground antecedent is a
    // membership probe; subst cannot grow from matching it.
    auto lo = std::lower_bound(it->second.begin(), it->second.end(), resolved);
    if (lo != it->second.end() && *lo == resolved)
      join_rest(rule, pivot, pos + 1, subst, index, out);
    return;
  }
  for (const Atom& fact : it->second)
    if (auto next = unify_extend(subst, rule.antecedents[pos], fact))
      join_rest(rule, pivot, pos + 1, *next, index, out);
}

std::vector<Candidate> run_item(const HornRule& rule, std::size_t pivot,
                                const Atom& delta_atom, const PredIndex& index) {
  std::vector<Candidate> out;
  if (auto seed = unify(rule.antecedents[pivot], delta_atom))
    join_rest(rule, pivot, 0, *seed, index, out);
  return out;
}

}  // namespace

PropagationResult forward_propagate(const FactBase& facts,
                                    const std::vector<HornRule>& rules,
                                    PropagateOptions opts) {
#ifndef _OPENMP
  (void)opts;
#endif
  PropagationResult result;
  std::set<Atom> known(facts.atoms().begin(), facts.atoms().end());

  // States seen so far per vertex, for conflict reporting.
  std::map<std::string, std::set<std::string>> states;
  for (const Atom& a : known)
    if (a.predicate == "hold" && a.args.size() == 2)
      states[a.args[0].name].insert(a.args[1].name);

  std::set<StateConflict> conflicts;
  auto admit = [&](const std::string& rule_name, const Substitution& subst,
                   const Atom& atom) {
    if (known.count(atom)) return false;
    known.insert(atom);
    result.derived.insert(atom);
    result.trace.push_back({rule_name, subst, atom});
    if (atom.predicate == "hold" && atom.args.size() == 2) {
      auto& seen = states[atom.args[0].name];
      for (const std::string& other : seen)
        if (other != atom.args[1].name)
          conflicts.insert({atom.args[0].name,
                            std::min(other, atom.args[1].name),
                            std::max(other, atom.args[1].name)});
      seen.insert(atom.args[1].name);
    }
    return true;
  };

  for (const HornRule& rule : rules)
    if (rule.antecedents.empty()) admit(rule.name, Substitution{}, rule.consequent);
  std::vector<Atom> delta(known.begin(), known.end());

  struct Item {
    const HornRule* rule;
    std::size_t pivot;
    const Atom* delta_atom;
  };

  while (true) {
    PredIndex index;
    for (const Atom& a : known) index[a.predicate].push_back(a);

    std::vector<Item> items;
    for (const HornRule& rule : rules)
      for (std::size_t pivot = 0; pivot < rule.antecedents.size(); ++pivot)
        for (const Atom& d : delta)
          if (d.predicate == rule.antecedents[pivot].predicate)
            items.push_back({&rule, pivot, &d});

    std::vector<std::vector<Candidate>> buckets(items.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (opts.parallel)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(items.size()); ++i) {
      const Item& it = items[static_cast<std::size_t>(i)];
      buckets[static_cast<std::size_t>(i)] =
          run_item(*it.rule, it.pivot, *it.delta_atom, index);
    }

    std::vector<Atom> next_delta;
    for (std::size_t i = 0; i < items.size(); ++i)
      for (const Candidate& c : buckets[i])
        if (admit(items[i].rule->name, c.subst, c.atom))
          next_delta.push_back(c.atom);

    if (next_delta.empty()) break;
    std::sort(next_delta.begin(), next_delta.end());
    delta = std::move(next_delta);
  }

  result.conflicts.assign(conflicts.begin(), conflicts.end());
  return result;
}

bool entails(const FactBase& facts, const std::vector<HornRule>& rules,
             const Atom& goal) {
  if (facts.contains(goal)) return true;
  PropagationResult r = forward_propagate(facts, rules);
  return r.derived.count(goal) != 0;
}

}  // namespace mfm
