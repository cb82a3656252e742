#pragma once

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "mfm/error.hpp"

namespace mfm {

// Lexical rules shared by the whole language: the first letter decides
// whether a name is a constant (upper case) or a variable (lower case).
bool is_lower_identifier(std::string_view s);
bool is_upper_identifier(std::string_view s);
bool is_identifier(std::string_view s);

enum class TermKind { Constant, Variable };

/// A flat term: a constant (vertex or state name) or a variable. There are
/// no function symbols, so terms never nest.
struct Term {
  TermKind kind = TermKind::Constant;
  std::string name;

  static Term constant(std::string name);   // requires upper-case first letter
  static Term variable(std::string name);   // requires lower-case first letter
  static Term from_name(std::string name);  // kind inferred from the case

  bool is_constant() const { return kind == TermKind::Constant; }
  bool is_variable() const { return kind == TermKind::Variable; }

  auto operator<=>(const Term&) const = default;
};

std::string to_string(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

/// Predicate applied to terms; arity may be zero.
struct Atom {
  std::string predicate;
  std::vector<Term> args;

  bool is_ground() const;
  auto operator<=>(const Atom&) const = default;
};

std::string to_string(const Atom& a);
std::ostream& operator<<(std::ostream& os, const Atom& a);

// Textual atom syntax: `pred(Arg1,Arg2)` or bare `pred`; whitespace around
// tokens is ignored. Errors carry the offending column in the message.
Atom parse_atom(std::string_view text);
Term parse_term(std::string_view text);

/// Variable bindings kept idempotent: no bound variable ever occurs inside a
/// bound term, so applying a substitution twice equals applying it once.
class Substitution {
 public:
  Substitution() = default;

  const std::map<std::string, Term>& bindings() const { return map_; }
  const Term* lookup(const std::string& var) const;

  // One lookup step; sufficient because the map is idempotent.
  Term resolve(const Term& t) const;

  // Binds var to value (resolving value first). Returns false on a clash
  // with an existing binding, true otherwise. A no-op self-binding is
  // accepted and not stored.
  bool bind(const std::string& var, Term value);

  bool empty() const { return map_.empty(); }
  std::size_t size() const { return map_.size(); }

  auto operator<=>(const Substitution&) const = default;

 private:
  std::map<std::string, Term> map_;
};

std::string to_string(const Substitution& s);

Atom apply_substitution(const Atom& a, const Substitution& s);

/// Most general unifier of two flat atoms, or nullopt when none exists
/// (distinct predicates, arities, or clashing constants).
std::optional<Substitution> unify(const Atom& a, const Atom& b);

/// Unification under an existing substitution; on success the returned
/// substitution extends the seed.
std::optional<Substitution> unify_extend(Substitution seed, const Atom& a,
                                         const Atom& b);

/// Definite clause: antecedents ⇒ consequent. Range-restriction (every
/// consequent variable occurs in some antecedent) is required by both
/// engines and checked at clause-set assembly.
struct HornRule {
  std::string name;
  std::vector<Atom> antecedents;
  Atom consequent;

  bool range_restricted() const;
  auto operator<=>(const HornRule&) const = default;
};

std::string to_string(const HornRule& r);
std::ostream& operator<<(std::ostream& os, const HornRule& r);

/// Renames every variable in the rule to name_suffix; used to keep rule
/// instances variable-disjoint across applications.
HornRule rename_apart(const HornRule& r, const std::string& suffix);

/// Connective tree over atoms. The full grammar (∧, ∨, ¬, ⇒) is
/// representable, but the engines consume only the Horn fragment; see
/// horn_from_formula.
class Formula {
 public:
  enum class Kind { Atomic, And, Or, Not, Implies };

  static Formula atomic(Atom a);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula negation(Formula f);
  static Formula implication(Formula antecedent, Formula consequent);

  Kind kind() const { return node_->kind; }
  const Atom& atom() const;  // Kind::Atomic only
  Formula left() const;      // And/Or/Implies; sole child of Not
  Formula right() const;     // And/Or/Implies

 private:
  struct Node {
    Kind kind;
    std::optional<Atom> atom;
    std::shared_ptr<const Node> l, r;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const Formula& f);

/// Converts `a1 ∧ … ∧ an ⇒ c` (or a bare ground atom) into a HornRule.
/// Throws NonHornFormula for anything containing ∨, ¬ or a nested ⇒.
HornRule horn_from_formula(const Formula& f, std::string name);

}  // namespace mfm
