#include "mfm/fol.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace mfm {

namespace {

bool ident_tail(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '_';
  });
}

}  // namespace

bool is_lower_identifier(std::string_view s) {
  return !s.empty() && std::islower(static_cast<unsigned char>(s[0])) &&
         ident_tail(s.substr(1));
}

bool is_upper_identifier(std::string_view s) {
  return !s.empty() && std::isupper(static_cast<unsigned char>(s[0])) &&
         ident_tail(s.substr(1));
}

bool is_identifier(std::string_view s) {
  return is_lower_identifier(s) || is_upper_identifier(s);
}

Term Term::constant(std::string name) {
  if (!is_upper_identifier(name))
    throw Error(ErrorCode::InvalidIdentifier,
                "constant must start with an upper-case letter: '" + name + "'");
  return Term{TermKind::Constant, std::move(name)};
}

Term Term::variable(std::string name) {
  if (!is_lower_identifier(name))
    throw Error(ErrorCode::InvalidIdentifier,
                "variable must start with a lower-case letter: '" + name + "'");
  return Term{TermKind::Variable, std::move(name)};
}

Term Term::from_name(std::string name) {
  if (is_upper_identifier(name)) return Term{TermKind::Constant, std::move(name)};
  if (is_lower_identifier(name)) return Term{TermKind::Variable, std::move(name)};
  throw Error(ErrorCode::InvalidIdentifier, "not an identifier: '" + name + "'");
}

std::string to_string(const Term& t) { return t.name; }

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << t.name; }

bool Atom::is_ground() const {
  return std::all_of(args.begin(), args.end(),
                     [](const Term& t) { return t.is_constant(); });
}

std::string to_string(const Atom& a) {
  if (a.args.empty()) return a.predicate;
  std::string out = a.predicate;
  out.push_back('(');
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) out.push_back(',');
    out += a.args[i].name;
  }
  out.push_back(')');
  return out;
}

std::ostream& operator<<(std::ostream& os, const Atom& a) {
  return os << to_string(a);
}

namespace {

// Minimal scanner for the textual atom syntax.
struct AtomScanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw Error(ErrorCode::SyntaxError,
                "atom syntax error at column " + std::to_string(pos + 1) + ": " + what);
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    if (start == pos) fail("expected an identifier");
    std::string name(text.substr(start, pos - start));
    if (!is_identifier(name)) fail("not an identifier: '" + name + "'");
    return name;
  }

  bool accept(char c) {
    skip_ws();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  void expect_end() {
    skip_ws();
    if (pos != text.size()) fail("trailing input");
  }
};

}  // namespace

Atom parse_atom(std::string_view text) {
  AtomScanner s{text};
  Atom a;
  a.predicate = s.ident();
  if (s.accept('(')) {
    if (!s.accept(')')) {
      do {
        a.args.push_back(Term::from_name(s.ident()));
      } while (s.accept(','));
      s.expect(')');
    }
  }
  s.expect_end();
  return a;
}

Term parse_term(std::string_view text) {
  AtomScanner s{text};
  Term t = Term::from_name(s.ident());
  s.expect_end();
  return t;
}

const Term* Substitution::lookup(const std::string& var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

Term Substitution::resolve(const Term& t) const {
  if (t.is_variable()) {
    if (const Term* bound = lookup(t.name)) return *bound;
  }
  return t;
}

bool Substitution::bind(const std::string& var, Term value) {
  value = resolve(value);
  if (const Term* bound = lookup(var)) return *bound == value;
  if (value.is_variable() && value.name == var) return true;
  // Rewrite existing bindings that mention var, keeping the map idempotent.
  for (auto& [v, t] : map_)
    if (t.is_variable() && t.name == var) t = value;
  map_.emplace(var, std::move(value));
  return true;
}

std::string to_string(const Substitution& s) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, t] : s.bindings()) {
    if (!first) out += ", ";
    first = false;
    out += v + "->" + t.name;
  }
  out += "}";
  return out;
}

Atom apply_substitution(const Atom& a, const Substitution& s) {
  Atom out;
  out.predicate = a.predicate;
  out.args.reserve(a.args.size());
  for (const Term& t : a.args) out.args.push_back(s.resolve(t));
  return out;
}

std::optional<Substitution> unify_extend(Substitution seed, const Atom& a,
                                         const Atom& b) {
  if (a.predicate != b.predicate || a.args.size() != b.args.size())
    return std::nullopt;
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    Term x = seed.resolve(a.args[i]);
    Term y = seed.resolve(b.args[i]);
    if (x == y) continue;
    if (x.is_variable()) {
      if (!seed.bind(x.name, y)) return std::nullopt;
    } else if (y.is_variable()) {
      if (!seed.bind(y.name, x)) return std::nullopt;
    } else {
      return std::nullopt;  // two distinct constants
    }
  }
  return seed;
}

std::optional<Substitution> unify(const Atom& a, const Atom& b) {
  return unify_extend(Substitution{}, a, b);
}

bool HornRule::range_restricted() const {
  for (const Term& t : consequent.args) {
    if (!t.is_variable()) continue;
    bool found = false;
    for (const Atom& a : antecedents) {
      for (const Term& u : a.args)
        if (u.is_variable() && u.name == t.name) {
          found = true;
          break;
        }
      if (found) break;
    }
    if (!found) return false;
  }
  return true;
}

std::string to_string(const HornRule& r) {
  std::string out = to_string(r.consequent) + " :- ";
  for (std::size_t i = 0; i < r.antecedents.size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.antecedents[i]);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const HornRule& r) {
  return os << to_string(r);
}

HornRule rename_apart(const HornRule& r, const std::string& suffix) {
  auto rename = [&](const Atom& a) {
    Atom out;
    out.predicate = a.predicate;
    out.args.reserve(a.args.size());
    for (const Term& t : a.args)
      out.args.push_back(t.is_variable()
                             ? Term{TermKind::Variable, t.name + "_" + suffix}
                             : t);
    return out;
  };
  HornRule out;
  out.name = r.name;
  out.antecedents.reserve(r.antecedents.size());
  for (const Atom& a : r.antecedents) out.antecedents.push_back(rename(a));
  out.consequent = rename(r.consequent);
  return out;
}

Formula Formula::atomic(Atom a) {
  return Formula(std::make_shared<Node>(Node{Kind::Atomic, std::move(a), nullptr, nullptr}));
}

Formula Formula::conjunction(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Kind::And, std::nullopt, l.node_, r.node_}));
}

Formula Formula::disjunction(Formula l, Formula r) {
  return Formula(std::make_shared<Node>(Node{Kind::Or, std::nullopt, l.node_, r.node_}));
}

Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<Node>(Node{Kind::Not, std::nullopt, f.node_, nullptr}));
}

Formula Formula::implication(Formula antecedent, Formula consequent) {
  return Formula(std::make_shared<Node>(
      Node{Kind::Implies, std::nullopt, antecedent.node_, consequent.node_}));
}

const Atom& Formula::atom() const {
  if (node_->kind != Kind::Atomic)
    throw Error(ErrorCode::NonHornFormula, "formula is not atomic");
  return *node_->atom;
}

Formula Formula::left() const { return Formula(node_->l); }
Formula Formula::right() const { return Formula(node_->r); }

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::Atomic:
      return to_string(f.atom());
    case Formula::Kind::And:
      return "(" + to_string(f.left()) + " & " + to_string(f.right()) + ")";
    case Formula::Kind::Or:
      return "(" + to_string(f.left()) + " | " + to_string(f.right()) + ")";
    case Formula::Kind::Not:
      return "~" + to_string(f.left());
    case Formula::Kind::Implies:
      return "(" + to_string(f.left()) + " => " + to_string(f.right()) + ")";
  }
  return {};
}

namespace {

void flatten_conjunction(const Formula& f, std::vector<Atom>& out) {
  switch (f.kind()) {
    case Formula::Kind::Atomic:
      out.push_back(f.atom());
      return;
    case Formula::Kind::And:
      flatten_conjunction(f.left(), out);
      flatten_conjunction(f.right(), out);
      return;
    default:
      throw Error(ErrorCode::NonHornFormula,
                  "rule body must be a conjunction of atoms");
  }
}

}  // namespace

HornRule horn_from_formula(const Formula& f, std::string name) {
  HornRule rule;
  rule.name = std::move(name);
  if (f.kind() == Formula::Kind::Atomic) {
    rule.consequent = f.atom();
  } else if (f.kind() == Formula::Kind::Implies) {
    flatten_conjunction(f.left(), rule.antecedents);
    if (f.right().kind() != Formula::Kind::Atomic)
      throw Error(ErrorCode::NonHornFormula, "rule head must be a single atom");
    rule.consequent = f.right().atom();
  } else {
    throw Error(ErrorCode::NonHornFormula,
                "only implications of atom conjunctions are Horn");
  }
  if (!rule.range_restricted())
    throw Error(ErrorCode::NotRangeRestricted,
                "consequent variable unbound in antecedents: " + to_string(rule));
  return rule;
}

}  // namespace mfm
