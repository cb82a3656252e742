#include "mfm/plan.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "mfm/propagate.hpp"

namespace mfm {

std::string to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Goal: return "goal";
    case NodeKind::Fact: return "fact";
    case NodeKind::Action: return "action";
    case NodeKind::Subgoal: return "subgoal";
  }
  return "?";
}

ReplayResult replay_actions(const ClauseSet& cs, const std::vector<Atom>& actions,
                            const Atom& goal) {
  ReplayResult out;
  std::set<Atom> state(cs.facts.atoms().begin(), cs.facts.atoms().end());

  auto erase_hold = [&](const std::string& vertex) {
    for (auto it = state.begin(); it != state.end();) {
      if (it->predicate == "hold" && it->args.size() == 2 &&
          it->args[0].name == vertex)
        it = state.erase(it);
      else
        ++it;
    }
  };

  auto settle = [&]() {
    FactBase fb = FactBase::from_atoms({state.begin(), state.end()});
    PropagationResult pr = forward_propagate(fb, cs.propagation_rules);
    std::map<std::string, std::vector<Atom>> per_vertex;
    std::vector<Atom> other;
    for (const Atom& a : pr.derived) {
      if (a.predicate == "hold" && a.args.size() == 2)
        per_vertex[a.args[0].name].push_back(a);
      else
        other.push_back(a);
    }
    for (const auto& [vertex, derived] : per_vertex)
      if (derived.size() > 1) {
        out.diagnostics.push_back("propagation derives " +
                                  std::to_string(derived.size()) +
                                  " distinct states for " + vertex);
        return false;
      }
    for (const auto& [vertex, derived] : per_vertex) {
      erase_hold(vertex);
      state.insert(derived.front());
    }
    for (const Atom& a : other) state.insert(a);
    return true;
  };

  auto finish = [&](bool ok) {
    out.ok = ok;
    out.final_state = state;
    return out;
  };

  if (!settle()) return finish(false);

  for (const Atom& act : actions) {
    const ActionRule* rule = nullptr;
    for (const ActionRule& ar : cs.action_rules)
      if (ar.action.predicate == act.predicate) {
        rule = &ar;
        break;
      }
    if (!rule || !act.is_ground()) {
      out.diagnostics.push_back("cannot instantiate action " + to_string(act));
      return finish(false);
    }
    auto subst = unify(rule->action, act);
    if (!subst) {
      out.diagnostics.push_back("cannot instantiate action " + to_string(act));
      return finish(false);
    }
    bool pres_ok = true;
    for (std::size_t i = 1; i < rule->rule.antecedents.size(); ++i) {
      Atom pre = apply_substitution(rule->rule.antecedents[i], *subst);
      if (!pre.is_ground() || !state.count(pre)) {
        out.diagnostics.push_back("precondition " + to_string(pre) + " of " +
                                  to_string(act) + " does not hold");
        pres_ok = false;
      }
    }
    if (!pres_ok) return finish(false);
    Atom effect = apply_substitution(rule->rule.consequent, *subst);
    if (!effect.is_ground() || effect.predicate != "hold" ||
        effect.args.size() != 2) {
      out.diagnostics.push_back("effect of " + to_string(act) +
                                " is not a ground hold atom");
      return finish(false);
    }
    erase_hold(effect.args[0].name);
    state.insert(effect);
    if (!settle()) return finish(false);
  }

  if (!state.count(goal)) {
    out.diagnostics.push_back("goal " + to_string(goal) +
                              " does not hold in the final state");
    return finish(false);
  }
  return finish(true);
}

namespace {

struct Proof {
  NodeKind kind = NodeKind::Fact;
  Atom atom;
  std::string rule;
  Substitution subst;
  std::vector<Proof> children;
};

int build_node(const Proof& p, PlanGraph& g) {
  int id = static_cast<int>(g.nodes.size());
  g.nodes.push_back({id, p.kind, p.atom});
  if (p.kind == NodeKind::Goal || p.kind == NodeKind::Subgoal) {
    std::vector<int> premises;
    premises.reserve(p.children.size());
    for (const Proof& c : p.children) premises.push_back(build_node(c, g));
    g.edges.push_back({p.rule, p.subst, std::move(premises), id});
  }
  return id;
}

PlanGraph build_graph(const Proof& root) {
  PlanGraph g;
  build_node(root, g);
  return g;
}

// Action nodes with their prerequisite actions: ai must precede bi when some
// effect node of ai lies in the premise closure of a precondition of bi.
struct ActionDeps {
  std::vector<int> node_ids;  // ascending
  std::vector<Atom> atoms;
  std::vector<std::set<std::size_t>> prereq;
};

ActionDeps action_dependencies(const PlanGraph& g) {
  std::map<int, NodeKind> kind;
  for (const PlanNode& n : g.nodes) kind[n.id] = n.kind;

  std::map<int, std::vector<const HyperEdge*>> edges_concluding;
  for (const HyperEdge& e : g.edges) edges_concluding[e.conclusion].push_back(&e);

  std::map<int, std::set<int>> closure_cache;
  std::function<const std::set<int>&(int)> closure = [&](int id) -> const std::set<int>& {
    auto it = closure_cache.find(id);
    if (it != closure_cache.end()) return it->second;
    auto& slot = closure_cache[id];
    slot.insert(id);
    for (const HyperEdge* e : edges_concluding[id])
      for (int q : e->premises) {
        if (slot.count(q)) continue;
        const std::set<int>& sub = closure(q);
        slot.insert(sub.begin(), sub.end());
      }
    return slot;
  };

  ActionDeps d;
  for (const PlanNode& n : g.nodes)
    if (n.kind == NodeKind::Action) {
      d.node_ids.push_back(n.id);
      d.atoms.push_back(n.atom);
    }
  std::map<int, std::size_t> index_of;
  for (std::size_t i = 0; i < d.node_ids.size(); ++i) index_of[d.node_ids[i]] = i;

  // For each action: the conclusions of edges it feeds (effect nodes) and the
  // non-action sibling premises of those edges (precondition nodes).
  std::vector<std::set<int>> effects(d.node_ids.size());
  std::vector<std::set<int>> preconds(d.node_ids.size());
  for (const HyperEdge& e : g.edges)
    for (int q : e.premises) {
      auto it = index_of.find(q);
      if (it == index_of.end()) continue;
      effects[it->second].insert(e.conclusion);
      for (int other : e.premises)
        if (kind[other] != NodeKind::Action) preconds[it->second].insert(other);
    }

  d.prereq.resize(d.node_ids.size());
  for (std::size_t b = 0; b < d.node_ids.size(); ++b)
    for (std::size_t a = 0; a < d.node_ids.size(); ++a) {
      if (a == b) continue;
      bool depends = false;
      for (int q : preconds[b]) {
        const std::set<int>& cl = closure(q);
        for (int eff : effects[a])
          if (cl.count(eff)) {
            depends = true;
            break;
          }
        if (depends) break;
      }
      if (depends) d.prereq[b].insert(a);
    }
  return d;
}

// Candidate order at every step: lexicographic by atom text, node id as the
// tie-break; the first enumerated order is therefore the canonical one.
std::vector<std::size_t> ready_candidates(const ActionDeps& d,
                                          const std::vector<bool>& used) {
  std::vector<std::size_t> ready;
  for (std::size_t i = 0; i < d.node_ids.size(); ++i) {
    if (used[i]) continue;
    bool ok = true;
    for (std::size_t pre : d.prereq[i])
      if (!used[pre]) {
        ok = false;
        break;
      }
    if (ok) ready.push_back(i);
  }
  std::sort(ready.begin(), ready.end(), [&](std::size_t x, std::size_t y) {
    std::string sx = to_string(d.atoms[x]);
    std::string sy = to_string(d.atoms[y]);
    if (sx != sy) return sx < sy;
    return d.node_ids[x] < d.node_ids[y];
  });
  return ready;
}

void enumerate_orders(const ActionDeps& d, std::vector<bool>& used,
                      std::vector<Atom>& current,
                      std::vector<std::vector<Atom>>& out) {
  if (current.size() == d.node_ids.size()) {
    if (std::find(out.begin(), out.end(), current) == out.end())
      out.push_back(current);
    return;
  }
  for (std::size_t i : ready_candidates(d, used)) {
    used[i] = true;
    current.push_back(d.atoms[i]);
    enumerate_orders(d, used, current, out);
    current.pop_back();
    used[i] = false;
  }
}

std::vector<std::vector<Atom>> enumerate_linearizations(const ActionDeps& d) {
  std::vector<std::vector<Atom>> out;
  std::vector<bool> used(d.node_ids.size(), false);
  std::vector<Atom> current;
  enumerate_orders(d, used, current, out);
  return out;
}

bool match_order(const ActionDeps& d, const std::vector<Atom>& order,
                 std::size_t pos, std::vector<bool>& used) {
  if (pos == order.size()) return true;
  for (std::size_t i = 0; i < d.node_ids.size(); ++i) {
    if (used[i] || d.atoms[i] != order[pos]) continue;
    bool ready = true;
    for (std::size_t pre : d.prereq[i])
      if (!used[pre]) {
        ready = false;
        break;
      }
    if (!ready) continue;
    used[i] = true;
    if (match_order(d, order, pos + 1, used)) return true;
    used[i] = false;
  }
  return false;
}

bool is_linearization(const ActionDeps& d, const std::vector<Atom>& order) {
  if (order.size() != d.node_ids.size()) return false;
  std::vector<bool> used(d.node_ids.size(), false);
  return match_order(d, order, 0, used);
}

std::set<std::string> rule_variables(const HornRule& r) {
  std::set<std::string> vars;
  auto collect = [&](const Atom& a) {
    for (const Term& t : a.args)
      if (t.is_variable()) vars.insert(t.name);
  };
  for (const Atom& a : r.antecedents) collect(a);
  collect(r.consequent);
  return vars;
}

// Maps the substitution over renamed variables back to the rule's own names
// for storage in the hyperedge.
Substitution edge_substitution(const Substitution& s, const HornRule& original,
                               const std::string& suffix) {
  Substitution out;
  for (const std::string& v : rule_variables(original))
    out.bind(v, s.resolve(Term::variable(v + "_" + suffix)));
  return out;
}

class Searcher {
 public:
  explicit Searcher(const PlanProblem& p) : p_(p) {
    for (const Atom& a : p.clause_set.facts.atoms())
      fact_index_[a.predicate].push_back(a);
    // Grounding domain for leftover action parameters: constants naming
    // vertices (structure-atom arguments and hold subjects).
    std::set<Term> domain;
    for (const Atom& a : p.clause_set.facts.atoms()) {
      if (a.predicate == "hold" && a.args.size() == 2)
        domain.insert(a.args[0]);
      else
        for (const Term& t : a.args) domain.insert(t);
    }
    domain_.assign(domain.begin(), domain.end());
  }

  PlanResult run() {
    PlanResult result;
    if (!p_.goal.is_ground())
      throw Error(ErrorCode::MalformedClauseSet,
                  "plan goal must be ground: " + to_string(p_.goal));
    for (int k = 0; k <= std::max(0, p_.max_actions); ++k) {
      stats_.action_bound_reached = k;
      std::vector<Atom> segment;
      bool found = solve_atom(
          p_.goal, Substitution{}, k, segment,
          [&](const Substitution&, int, Proof pr) {
            return test_tree(std::move(pr), result);
          });
      if (found) break;
    }
    result.stats = stats_;
    return result;
  }

 private:
  using Yield = std::function<bool(const Substitution&, int, Proof)>;
  using YieldList =
      std::function<bool(const Substitution&, int, std::vector<Proof>)>;

  bool test_tree(Proof tree, PlanResult& result) {
    ++stats_.trees_found;
    Proof root;
    if (tree.kind == NodeKind::Fact) {
      root = Proof{NodeKind::Goal, tree.atom, "init", Substitution{}, {tree}};
    } else {
      root = std::move(tree);
      root.kind = NodeKind::Goal;
    }
    PlanGraph g = build_graph(root);
    ActionDeps deps = action_dependencies(g);
    for (const std::vector<Atom>& order : enumerate_linearizations(deps)) {
      ReplayResult rr = replay_actions(p_.clause_set, order, p_.goal);
      if (rr.ok) {
        g.action_order = order;
        result.plan = std::move(g);
        return true;
      }
    }
    ++stats_.trees_rejected;
    return false;
  }

  bool solve_list(const std::vector<Atom>& atoms, std::size_t idx,
                  const Substitution& subst, int budget,
                  std::vector<Atom>& segment, const YieldList& yield) {
    if (idx == atoms.size()) return yield(subst, budget, {});
    return solve_atom(
        atoms[idx], subst, budget, segment,
        [&](const Substitution& s2, int b2, Proof pr) {
          return solve_list(
              atoms, idx + 1, s2, b2, segment,
              [&](const Substitution& s3, int b3, std::vector<Proof> rest) {
                std::vector<Proof> all;
                all.reserve(rest.size() + 1);
                all.push_back(pr);
                for (Proof& r : rest) all.push_back(std::move(r));
                return yield(s3, b3, std::move(all));
              });
        });
  }

  bool ground_leftover(const Atom& a, const Substitution& s,
                       const std::function<bool(const Substitution&)>& k) {
    for (const Term& t : a.args) {
      Term r = s.resolve(t);
      if (!r.is_variable()) continue;
      for (const Term& c : domain_) {
        Substitution s2 = s;
        s2.bind(r.name, c);
        if (ground_leftover(a, s2, k)) return true;
      }
      return false;
    }
    return k(s);
  }

  bool solve_atom(const Atom& pattern, const Substitution& subst, int budget,
                  std::vector<Atom>& segment, const Yield& yield) {
    ++stats_.nodes_expanded;
    ++depth_;
    stats_.max_depth = std::max(stats_.max_depth, depth_);
    bool aborted = solve_atom_inner(pattern, subst, budget, segment, yield);
    --depth_;
    return aborted;
  }

  bool solve_atom_inner(const Atom& pattern, const Substitution& subst,
                        int budget, std::vector<Atom>& segment,
                        const Yield& yield) {
    Atom g = apply_substitution(pattern, subst);
    bool ground = g.is_ground();
    if (ground) {
      auto it = failed_.find(g);
      if (it != failed_.end() && budget <= it->second) return false;
    }

    bool yielded = false;
    auto note = [&](const Substitution& s, int b, Proof pr) {
      yielded = true;
      return yield(s, b, std::move(pr));
    };
    std::uint64_t cuts_before = cut_events_;

    auto fit = fact_index_.find(pattern.predicate);
    if (fit != fact_index_.end())
      for (const Atom& f : fit->second)
        if (auto s2 = unify_extend(subst, pattern, f))
          if (note(*s2, budget,
                   Proof{NodeKind::Fact, f, "", Substitution{}, {}}))
            return true;

    // A ground subgoal repeating inside the current segment would cycle at
    // one time point; cut the rule routes, fact matches stand.
    if (ground && std::find(segment.begin(), segment.end(), g) != segment.end()) {
      ++cut_events_;
      return false;
    }

    if (ground) segment.push_back(g);
    bool aborted = rule_routes(pattern, subst, budget, segment, note);
    if (ground) segment.pop_back();
    if (aborted) return true;

    if (!yielded && ground && cut_events_ == cuts_before) {
      auto [it, inserted] = failed_.emplace(g, budget);
      if (!inserted) it->second = std::max(it->second, budget);
    }
    return false;
  }

  bool rule_routes(const Atom& pattern, const Substitution& subst, int budget,
                   std::vector<Atom>& segment, const Yield& note) {
    for (const HornRule& rule : p_.clause_set.propagation_rules) {
      std::string suffix = std::to_string(++rename_counter_);
      HornRule renamed = rename_apart(rule, suffix);
      auto seed = unify_extend(subst, pattern, renamed.consequent);
      if (!seed) continue;
      bool aborted = solve_list(
          renamed.antecedents, 0, *seed, budget, segment,
          [&](const Substitution& s, int b, std::vector<Proof> premises) {
            Proof node{NodeKind::Subgoal, apply_substitution(pattern, s),
                       rule.name, edge_substitution(s, rule, suffix),
                       std::move(premises)};
            return note(s, b, std::move(node));
          });
      if (aborted) return true;
    }

    if (budget <= 0) return false;
    for (const ActionRule& ar : p_.clause_set.action_rules) {
      std::string suffix = std::to_string(++rename_counter_);
      HornRule renamed = rename_apart(ar.rule, suffix);
      auto seed = unify_extend(subst, pattern, renamed.consequent);
      if (!seed) continue;
      std::vector<Atom> preconditions(renamed.antecedents.begin() + 1,
                                      renamed.antecedents.end());
      // New segment: subgoals below an action live at an earlier time point.
      std::vector<Atom> fresh_segment;
      bool aborted = solve_list(
          preconditions, 0, *seed, budget - 1, fresh_segment,
          [&](const Substitution& s, int b, std::vector<Proof> premises) {
            return ground_leftover(
                renamed.antecedents[0], s, [&](const Substitution& s2) {
                  Atom act = apply_substitution(renamed.antecedents[0], s2);
                  std::vector<Proof> all;
                  all.reserve(premises.size() + 1);
                  all.push_back(
                      Proof{NodeKind::Action, act, "", Substitution{}, {}});
                  for (const Proof& pr : premises) all.push_back(pr);
                  Proof node{NodeKind::Subgoal,
                             apply_substitution(pattern, s2), ar.rule.name,
                             edge_substitution(s2, ar.rule, suffix),
                             std::move(all)};
                  return note(s2, b, std::move(node));
                });
          });
      if (aborted) return true;
    }
    return false;
  }

  const PlanProblem& p_;
  std::map<std::string, std::vector<Atom>> fact_index_;
  std::vector<Term> domain_;
  std::map<Atom, int> failed_;
  std::uint64_t cut_events_ = 0;
  int rename_counter_ = 0;
  int depth_ = 0;
  SearchStats stats_;
};

}  // namespace

PlanResult abduce_plan(const PlanProblem& p) {
  Searcher searcher(p);
  return searcher.run();
}

std::vector<Atom> extract_action_sequence(const PlanGraph& g) {
  ActionDeps d = action_dependencies(g);
  std::vector<bool> used(d.node_ids.size(), false);
  std::vector<Atom> out;
  while (out.size() < d.node_ids.size()) {
    std::vector<std::size_t> ready = ready_candidates(d, used);
    if (ready.empty())
      throw Error(ErrorCode::CycleDetected,
                  "action dependencies contain a cycle");
    used[ready.front()] = true;
    out.push_back(d.atoms[ready.front()]);
  }
  return out;
}

ValidationReport validate_plan(const PlanProblem& p, const PlanGraph& g) {
  ValidationReport rep;
  auto flag = [&](std::string m) { rep.diagnostics.push_back(std::move(m)); };

  std::map<int, const PlanNode*> byid;
  for (const PlanNode& n : g.nodes)
    if (!byid.emplace(n.id, &n).second)
      flag("node id " + std::to_string(n.id) + " is not unique");

  bool refs_ok = true;
  for (const HyperEdge& e : g.edges) {
    if (!byid.count(e.conclusion)) {
      flag("edge for rule " + e.rule + " concludes an unknown node");
      refs_ok = false;
    }
    for (int q : e.premises)
      if (!byid.count(q)) {
        flag("edge for rule " + e.rule + " references an unknown premise");
        refs_ok = false;
      }
  }

  if (refs_ok) {
    std::map<int, int> concluded;
    for (const HyperEdge& e : g.edges) ++concluded[e.conclusion];
    int goal_nodes = 0;
    for (const PlanNode& n : g.nodes) {
      int c = concluded.count(n.id) ? concluded[n.id] : 0;
      bool leaf = n.kind == NodeKind::Fact || n.kind == NodeKind::Action;
      if (leaf && c != 0)
        flag(to_string(n.kind) + " node " + to_string(n.atom) +
             " must not be a conclusion");
      if (!leaf && c != 1)
        flag(to_string(n.kind) + " node " + to_string(n.atom) +
             " must be the conclusion of exactly one hyperedge, has " +
             std::to_string(c));
      if (n.kind == NodeKind::Goal) {
        ++goal_nodes;
        if (n.atom != p.goal)
          flag("goal node atom " + to_string(n.atom) +
               " differs from the problem goal " + to_string(p.goal));
      }
      if (n.kind == NodeKind::Fact && !p.clause_set.facts.contains(n.atom))
        flag("fact node " + to_string(n.atom) + " is not an initial fact");
    }
    if (goal_nodes != 1)
      flag("plan graph must contain exactly one goal node, has " +
           std::to_string(goal_nodes));

    // Cycle check over premise -> conclusion arcs.
    std::map<int, std::vector<int>> succ;
    for (const HyperEdge& e : g.edges)
      for (int q : e.premises) succ[q].push_back(e.conclusion);
    std::map<int, int> color;  // 0 white, 1 grey, 2 black
    bool cyclic = false;
    std::function<void(int)> visit = [&](int id) {
      color[id] = 1;
      for (int nxt : succ[id]) {
        if (color[nxt] == 1) cyclic = true;
        else if (color[nxt] == 0) visit(nxt);
        if (cyclic) return;
      }
      color[id] = 2;
    };
    for (const PlanNode& n : g.nodes) {
      if (color[n.id] == 0) visit(n.id);
      if (cyclic) break;
    }
    if (cyclic) flag("hyperedge structure contains a cycle");

    auto check_application = [&](const HyperEdge& e, const HornRule& rule,
                                 bool first_is_action) {
      Atom conclusion = apply_substitution(rule.consequent, e.subst);
      if (byid[e.conclusion]->atom != conclusion)
        flag("rule " + e.rule + " under its substitution concludes " +
             to_string(conclusion) + ", node holds " +
             to_string(byid[e.conclusion]->atom));
      if (e.premises.size() != rule.antecedents.size()) {
        flag("rule " + e.rule + " expects " +
             std::to_string(rule.antecedents.size()) + " premises, edge has " +
             std::to_string(e.premises.size()));
        return;
      }
      for (std::size_t i = 0; i < e.premises.size(); ++i) {
        Atom expected = apply_substitution(rule.antecedents[i], e.subst);
        const PlanNode& node = *byid[e.premises[i]];
        if (node.atom != expected)
          flag("premise " + std::to_string(i) + " of rule " + e.rule +
               " should be " + to_string(expected) + ", node holds " +
               to_string(node.atom));
        if (first_is_action && i == 0 && node.kind != NodeKind::Action)
          flag("first premise of action rule " + e.rule +
               " must be an action node");
      }
    };

    for (const HyperEdge& e : g.edges) {
      if (e.rule == "init") {
        if (e.premises.size() != 1)
          flag("init edge must have exactly one premise");
        else {
          const PlanNode& prem = *byid[e.premises[0]];
          if (prem.kind != NodeKind::Fact ||
              prem.atom != byid[e.conclusion]->atom)
            flag("init edge must justify the goal by an equal fact node");
        }
        continue;
      }
      const HornRule* named = nullptr;
      bool is_action = false;
      for (const HornRule& r : p.clause_set.propagation_rules)
        if (r.name == e.rule) named = &r;
      if (!named)
        for (const ActionRule& ar : p.clause_set.action_rules)
          if (ar.rule.name == e.rule) {
            named = &ar.rule;
            is_action = true;
          }
      if (!named) {
        flag("edge names unknown rule " + e.rule);
        continue;
      }
      check_application(e, *named, is_action);
    }

    if (!cyclic) {
      ActionDeps deps = action_dependencies(g);
      std::vector<Atom> graph_atoms = deps.atoms;
      std::vector<Atom> order_atoms = g.action_order;
      std::sort(graph_atoms.begin(), graph_atoms.end());
      std::sort(order_atoms.begin(), order_atoms.end());
      if (graph_atoms != order_atoms)
        flag("action_order does not list the action nodes exactly once each");
      else if (!is_linearization(deps, g.action_order))
        flag("action_order is not a topological linearization");
    }
  }

  bool structural_ok = rep.diagnostics.empty();
  ReplayResult rr = replay_actions(p.clause_set, g.action_order, p.goal);
  for (std::string& d : rr.diagnostics) rep.diagnostics.push_back(std::move(d));
  rep.final_state = std::move(rr.final_state);
  rep.ok = structural_ok && rr.ok;
  return rep;
}

std::string to_dot(const PlanGraph& g) {
  auto shape = [](NodeKind k) {
    switch (k) {
      case NodeKind::Goal: return "doublecircle";
      case NodeKind::Fact: return "box";
      case NodeKind::Action: return "hexagon";
      case NodeKind::Subgoal: return "ellipse";
    }
    return "ellipse";
  };
  std::ostringstream os;
  os << "digraph plan {\n";
  os << "  label=\"arrows run premise -> conclusion; abduction traversed them "
        "in reverse\";\n";
  for (const PlanNode& n : g.nodes)
    os << "  n" << n.id << " [shape=" << shape(n.kind) << ", label=\""
       << to_string(n.atom) << "\"];\n";
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const HyperEdge& e = g.edges[i];
    os << "  e" << i << " [shape=point, xlabel=\"" << e.rule << "\"];\n";
    for (int q : e.premises) os << "  n" << q << " -> e" << i << ";\n";
    os << "  e" << i << " -> n" << e.conclusion << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace mfm
