#include "mfm/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace mfm {

namespace {

std::string format_message(SourcePos pos, const std::string& message,
                           const std::vector<std::string>& expected) {
  std::ostringstream os;
  os << pos.line << ":" << pos.column << ": " << message;
  if (!expected.empty()) {
    os << " (expected ";
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (i) os << (i + 1 == expected.size() ? " or " : ", ");
      os << expected[i];
    }
    os << ")";
  }
  return os.str();
}

}  // namespace

ParseError::ParseError(ErrorCode code, SourcePos pos, const std::string& message,
                       std::vector<std::string> expected)
    : Error(code, format_message(pos, message, expected)),
      pos_(pos),
      expected_(std::move(expected)) {}

namespace {

enum class Tok { Ident, Int, LBrace, RBrace, LParen, RParen, Semi, Colon, Comma, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Int: return "integer";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Semi: return "';'";
    case Tok::Colon: return "':'";
    case Tok::Comma: return "','";
    case Tok::Arrow: return "'->'";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    SourcePos pos{line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                                 text[i] == '_'))
        advance(1);
      out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), pos});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        advance(1);
      out.push_back({Tok::Int, std::string(text.substr(start, i - start)), pos});
      continue;
    }
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      advance(2);
      out.push_back({Tok::Arrow, "->", pos});
      continue;
    }
    Tok kind;
    switch (c) {
      case '{': kind = Tok::LBrace; break;
      case '}': kind = Tok::RBrace; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ';': kind = Tok::Semi; break;
      case ':': kind = Tok::Colon; break;
      case ',': kind = Tok::Comma; break;
      default:
        throw ParseError(ErrorCode::SyntaxError, pos,
                         std::string("unexpected character '") + c + "'");
    }
    advance(1);
    out.push_back({kind, std::string(1, c), pos});
  }
  SourcePos end_pos{line, col};
  out.push_back({Tok::End, "", end_pos});
  return out;
}

// Keywords are contextual: an Ident token with the right spelling.
struct Parser {
  std::vector<Token> toks;
  std::size_t idx = 0;
  TypeRegistry* registry = nullptr;

  const Token& peek() const { return toks[idx]; }
  const Token& next() { return toks[idx++]; }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  bool accept_keyword(std::string_view kw) {
    if (!at_keyword(kw)) return false;
    ++idx;
    return true;
  }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected = {}) {
    throw ParseError(ErrorCode::SyntaxError, peek().pos, message,
                     std::move(expected));
  }

  [[noreturn]] void semantic(SourcePos pos, const std::string& message) {
    throw ParseError(ErrorCode::SemanticError, pos, message);
  }

  void expect_keyword(std::string_view kw) {
    if (!accept_keyword(kw))
      fail("unexpected " + describe(peek()), {"'" + std::string(kw) + "'"});
  }

  Token expect(Tok kind) {
    if (peek().kind != kind)
      fail("unexpected " + describe(peek()), {tok_name(kind)});
    return next();
  }

  static std::string describe(const Token& t) {
    if (t.kind == Tok::Ident || t.kind == Tok::Int) return "'" + t.text + "'";
    return tok_name(t.kind);
  }

  std::string ident() { return expect(Tok::Ident).text; }

  std::string upper_ident(const std::string& what) {
    Token t = expect(Tok::Ident);
    if (!is_upper_identifier(t.text))
      semantic(t.pos, what + " must be capitalized: '" + t.text + "'");
    return t.text;
  }

  std::string lower_ident(const std::string& what) {
    Token t = expect(Tok::Ident);
    if (!is_lower_identifier(t.text))
      semantic(t.pos, what + " must be lower-case: '" + t.text + "'");
    return t.text;
  }

  void note_function(const std::string& label, SourcePos pos) {
    if (!is_lower_identifier(label))
      semantic(pos, "function type must be lower-case: '" + label + "'");
    if (registry) registry->register_function(label);
  }

  void note_relation(const std::string& label, SourcePos pos) {
    if (!is_lower_identifier(label))
      semantic(pos, "relation type must be lower-case: '" + label + "'");
    if (registry) registry->register_relation(label);
  }

  Atom atom() {
    Token name = expect(Tok::Ident);
    Atom a;
    a.predicate = name.text;
    if (!is_lower_identifier(a.predicate))
      semantic(name.pos, "predicate must be lower-case: '" + a.predicate + "'");
    if (peek().kind == Tok::LParen) {
      next();
      if (peek().kind != Tok::RParen) {
        do {
          Token t = expect(Tok::Ident);
          try {
            a.args.push_back(Term::from_name(t.text));
          } catch (const Error& e) {
            semantic(t.pos, e.what());
          }
        } while (peek().kind == Tok::Comma && (next(), true));
      }
      expect(Tok::RParen);
    }
    return a;
  }

  Atom hold_atom(const std::string& where) {
    Token start = peek();
    Atom a = atom();
    if (a.predicate != "hold" || a.args.size() != 2)
      semantic(start.pos, where + " must be a binary hold atom, got " + to_string(a));
    if (!a.args[1].is_constant())
      semantic(start.pos, where + " state must be a capitalized label, got " +
                              a.args[1].name);
    return a;
  }

  // model NAME { (vertexDecl | edgeDecl)* }
  MfmModel model() {
    expect_keyword("model");
    Token name = expect(Tok::Ident);
    if (!is_upper_identifier(name.text))
      semantic(name.pos, "model name must be capitalized: '" + name.text + "'");
    expect(Tok::LBrace);

    struct VertexDecl { Vertex v; SourcePos pos; };
    struct EdgeDecl { Edge e; SourcePos pos; };
    std::vector<VertexDecl> vdecls;
    std::vector<EdgeDecl> edecls;
    while (peek().kind != Tok::RBrace) {
      if (at_keyword("vertex")) {
        Token kw = next();
        std::string vname = upper_ident("vertex name");
        expect(Tok::Colon);
        Token fn = expect(Tok::Ident);
        note_function(fn.text, fn.pos);
        std::optional<StateLabel> state;
        if (accept_keyword("state"))
          state = StateLabel(upper_ident("state label"));
        expect(Tok::Semi);
        vdecls.push_back({Vertex{vname, FunctionType(fn.text), state}, kw.pos});
      } else if (at_keyword("edge")) {
        Token kw = next();
        std::string from = upper_ident("edge endpoint");
        expect(Tok::Arrow);
        std::string to = upper_ident("edge endpoint");
        expect(Tok::Colon);
        Token rel = expect(Tok::Ident);
        note_relation(rel.text, rel.pos);
        bool flow = accept_keyword("flow");
        expect(Tok::Semi);
        edecls.push_back({Edge{from, to, RelationType(rel.text), flow}, kw.pos});
      } else {
        fail("unexpected " + describe(peek()), {"'vertex'", "'edge'", "'}'"});
      }
    }
    expect(Tok::RBrace);

    // Declarations are collected first so edges may reference vertices
    // declared later in the block.
    MfmModel m;
    m.name = name.text;
    for (auto& d : vdecls) {
      try {
        m = add_vertex(m, std::move(d.v));
      } catch (const Error& e) {
        semantic(d.pos, e.what());
      }
    }
    for (auto& d : edecls) {
      try {
        m = add_edge(m, std::move(d.e));
      } catch (const Error& e) {
        semantic(d.pos, e.what());
      }
    }
    return m;
  }

  // rule NAME { pattern { ... } cause holdAtom; (effect holdAtom;)+ }
  RuleSource rule() {
    expect_keyword("rule");
    Token name = expect(Tok::Ident);
    if (!is_identifier(name.text))
      semantic(name.pos, "rule name is not an identifier: '" + name.text + "'");
    expect(Tok::LBrace);
    expect_keyword("pattern");
    expect(Tok::LBrace);

    MfmModel pattern;
    pattern.name = name.text;
    while (peek().kind != Tok::RBrace) {
      if (at_keyword("vertex")) {
        next();
        Token vname = expect(Tok::Ident);
        if (!is_lower_identifier(vname.text))
          semantic(vname.pos,
                   "pattern vertices are variables and must be lower-case: '" +
                       vname.text + "'");
        expect(Tok::Colon);
        Token fn = expect(Tok::Ident);
        note_function(fn.text, fn.pos);
        if (at_keyword("state"))
          throw ParseError(ErrorCode::StatefulPattern, peek().pos,
                           "pattern vertices carry no state");
        expect(Tok::Semi);
        if (pattern.find_vertex(vname.text))
          semantic(vname.pos, "pattern vertex '" + vname.text + "' declared twice");
        pattern.vertices.push_back(
            Vertex{vname.text, FunctionType(fn.text), std::nullopt});
      } else if (at_keyword("edge")) {
        Token kw = next();
        std::string from = lower_ident("pattern edge endpoint");
        expect(Tok::Arrow);
        std::string to = lower_ident("pattern edge endpoint");
        expect(Tok::Colon);
        Token rel = expect(Tok::Ident);
        note_relation(rel.text, rel.pos);
        bool flow = accept_keyword("flow");
        expect(Tok::Semi);
        try {
          pattern = add_edge(pattern, Edge{from, to, RelationType(rel.text), flow});
        } catch (const Error& e) {
          semantic(kw.pos, e.what());
        }
      } else {
        fail("unexpected " + describe(peek()), {"'vertex'", "'edge'", "'}'"});
      }
    }
    expect(Tok::RBrace);

    auto vertex_state = [&](const char* what) {
      expect_keyword(what);
      Token start = peek();
      Atom a = hold_atom(std::string(what) + " atom");
      if (!a.args[0].is_variable())
        semantic(start.pos, std::string(what) +
                                " must name a pattern vertex variable, got " +
                                a.args[0].name);
      if (!pattern.find_vertex(a.args[0].name))
        semantic(start.pos, std::string(what) + " variable '" + a.args[0].name +
                                "' is not a pattern vertex");
      expect(Tok::Semi);
      return std::pair<std::string, StateLabel>{a.args[0].name,
                                                StateLabel(a.args[1].name)};
    };

    auto cause = vertex_state("cause");
    std::vector<std::pair<std::string, StateLabel>> effects;
    effects.push_back(vertex_state("effect"));
    while (at_keyword("effect")) effects.push_back(vertex_state("effect"));
    expect(Tok::RBrace);
    return RuleSource{name.text, std::move(pattern), std::move(cause),
                      std::move(effects)};
  }

  // action IDENT ( v, ... ) { (pre atom;)* effect holdAtom; }
  ActionSource action() {
    expect_keyword("action");
    Token name = expect(Tok::Ident);
    if (!is_lower_identifier(name.text))
      semantic(name.pos, "action name must be lower-case: '" + name.text + "'");
    expect(Tok::LParen);
    std::vector<std::string> params;
    std::set<std::string> param_set;
    do {
      Token p = expect(Tok::Ident);
      if (!is_lower_identifier(p.text))
        semantic(p.pos, "action parameter must be lower-case: '" + p.text + "'");
      if (!param_set.insert(p.text).second)
        semantic(p.pos, "action parameter '" + p.text + "' repeated");
      params.push_back(p.text);
    } while (peek().kind == Tok::Comma && (next(), true));
    expect(Tok::RParen);
    expect(Tok::LBrace);

    auto check_bound = [&](const Atom& a, SourcePos pos) {
      for (const Term& t : a.args)
        if (t.is_variable() && !param_set.count(t.name))
          semantic(pos, "variable '" + t.name + "' in " + to_string(a) +
                            " is not an action parameter");
    };

    std::vector<Atom> pres;
    while (at_keyword("pre")) {
      next();
      Token start = peek();
      Atom a = atom();
      check_bound(a, start.pos);
      expect(Tok::Semi);
      pres.push_back(std::move(a));
    }
    expect_keyword("effect");
    Token estart = peek();
    Atom effect = hold_atom("action effect");
    check_bound(effect, estart.pos);
    expect(Tok::Semi);
    expect(Tok::RBrace);
    return ActionSource{name.text, std::move(params), std::move(pres),
                        std::move(effect)};
  }

  // problem { model NAME; goal holdAtom; (max_actions INT;)? }
  ProblemSource problem() {
    expect_keyword("problem");
    expect(Tok::LBrace);
    expect_keyword("model");
    std::string model_ref = upper_ident("model reference");
    expect(Tok::Semi);
    expect_keyword("goal");
    Token gstart = peek();
    Atom goal = hold_atom("goal");
    if (!goal.is_ground())
      semantic(gstart.pos, "goal must be ground, got " + to_string(goal));
    expect(Tok::Semi);
    int max_actions = 5;
    if (accept_keyword("max_actions")) {
      Token n = expect(Tok::Int);
      max_actions = std::stoi(n.text);
      if (max_actions < 1) semantic(n.pos, "max_actions must be at least 1");
      expect(Tok::Semi);
    }
    expect(Tok::RBrace);
    return ProblemSource{std::move(model_ref), std::move(goal), max_actions};
  }

  Document document() {
    Document d;
    std::set<std::string> rule_names;
    std::set<std::string> action_names;
    while (peek().kind != Tok::End) {
      if (at_keyword("model")) {
        d.models.push_back(model());
      } else if (at_keyword("rule")) {
        Token start = peek();
        RuleSource r = rule();
        if (!rule_names.insert(r.name).second)
          semantic(start.pos, "rule '" + r.name + "' declared twice");
        d.rules.push_back(std::move(r));
      } else if (at_keyword("action")) {
        Token start = peek();
        ActionSource a = action();
        if (!action_names.insert(a.name).second)
          semantic(start.pos, "action '" + a.name + "' declared twice");
        d.actions.push_back(std::move(a));
      } else if (at_keyword("problem")) {
        d.problems.push_back(problem());
      } else {
        fail("unexpected " + describe(peek()),
             {"'model'", "'rule'", "'action'", "'problem'"});
      }
    }
    return d;
  }
};

Document parse_with(std::string_view text, TypeRegistry* registry) {
  Parser p{lex(text), 0, registry};
  return p.document();
}

[[noreturn]] void reject(const char* what) {
  throw ParseError(ErrorCode::SemanticError, SourcePos{1, 1},
                   std::string("input must contain ") + what);
}

}  // namespace

Document parse_document(std::string_view text) { return parse_with(text, nullptr); }

Document parse_document(std::string_view text, TypeRegistry& registry) {
  return parse_with(text, &registry);
}

MfmModel parse_model(std::string_view text, TypeRegistry& registry) {
  Document d = parse_document(text, registry);
  if (d.models.size() != 1 || !d.rules.empty() || !d.actions.empty() ||
      !d.problems.empty())
    reject("exactly one model and nothing else");
  return std::move(d.models.front());
}

MfmModel parse_model(std::string_view text) {
  TypeRegistry registry;
  return parse_model(text, registry);
}

std::vector<RuleSource> parse_rules(std::string_view text, TypeRegistry& registry) {
  Document d = parse_document(text, registry);
  if (!d.models.empty() || !d.actions.empty() || !d.problems.empty())
    reject("only rule declarations");
  return std::move(d.rules);
}

std::vector<RuleSource> parse_rules(std::string_view text) {
  TypeRegistry registry;
  return parse_rules(text, registry);
}

std::vector<ActionSource> parse_actions(std::string_view text) {
  Document d = parse_document(text);
  if (!d.models.empty() || !d.rules.empty() || !d.problems.empty())
    reject("only action declarations");
  return std::move(d.actions);
}

ProblemSource parse_problem(std::string_view text) {
  Document d = parse_document(text);
  if (d.problems.size() != 1 || !d.models.empty() || !d.rules.empty() ||
      !d.actions.empty())
    reject("exactly one problem and nothing else");
  return std::move(d.problems.front());
}

namespace {

std::string print_atom_spaced(const Atom& a) {
  std::string out = a.predicate;
  if (!a.args.empty()) {
    out.push_back('(');
    for (std::size_t i = 0; i < a.args.size(); ++i) {
      if (i) out += ", ";
      out += a.args[i].name;
    }
    out.push_back(')');
  }
  return out;
}

void print_body(std::ostream& os, const MfmModel& m, const char* indent) {
  for (const Vertex& v : m.vertices) {
    os << indent << "vertex " << v.name << ": " << v.function.label;
    if (v.state) os << " state " << v.state->label;
    os << ";\n";
  }
  for (const Edge& e : m.edges) {
    os << indent << "edge " << e.from << " -> " << e.to << ": "
       << e.relation.label;
    if (e.carries_flow) os << " flow";
    os << ";\n";
  }
}

}  // namespace

std::string print_model(const MfmModel& m) {
  std::ostringstream os;
  os << "model " << m.name << " {\n";
  print_body(os, m, "  ");
  os << "}\n";
  return os.str();
}

std::string print_rule(const RuleSource& r) {
  std::ostringstream os;
  os << "rule " << r.name << " {\n  pattern {\n";
  print_body(os, r.pattern, "    ");
  os << "  }\n";
  os << "  cause hold(" << r.cause.first << ", " << r.cause.second.label << ");\n";
  for (const auto& [var, state] : r.effects)
    os << "  effect hold(" << var << ", " << state.label << ");\n";
  os << "}\n";
  return os.str();
}

std::string print_rules(const std::vector<RuleSource>& rules) {
  std::string out;
  for (std::size_t i = 0; i < rules.size(); ++i) {
    if (i) out += "\n";
    out += print_rule(rules[i]);
  }
  return out;
}

std::string print_action(const ActionSource& a) {
  std::ostringstream os;
  os << "action " << a.name << "(";
  for (std::size_t i = 0; i < a.params.size(); ++i) {
    if (i) os << ", ";
    os << a.params[i];
  }
  os << ") {\n";
  for (const Atom& pre : a.preconditions)
    os << "  pre " << print_atom_spaced(pre) << ";\n";
  os << "  effect " << print_atom_spaced(a.effect) << ";\n}\n";
  return os.str();
}

std::string print_actions(const std::vector<ActionSource>& actions) {
  std::string out;
  for (std::size_t i = 0; i < actions.size(); ++i) {
    if (i) out += "\n";
    out += print_action(actions[i]);
  }
  return out;
}

std::string print_problem(const ProblemSource& p) {
  std::ostringstream os;
  os << "problem {\n  model " << p.model_ref << ";\n  goal "
     << print_atom_spaced(p.goal) << ";\n  max_actions " << p.max_actions
     << ";\n}\n";
  return os.str();
}

std::string print_document(const Document& d) {
  std::vector<std::string> parts;
  for (const MfmModel& m : d.models) parts.push_back(print_model(m));
  for (const RuleSource& r : d.rules) parts.push_back(print_rule(r));
  for (const ActionSource& a : d.actions) parts.push_back(print_action(a));
  for (const ProblemSource& p : d.problems) parts.push_back(print_problem(p));
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "\n";
    out += parts[i];
  }
  return out;
}

}  // namespace mfm
