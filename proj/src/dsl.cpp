#include "hycause/dsl.hpp"

#include <cctype>
#include <set>
#include <sstream>

namespace hycause {

namespace {

enum class Tok {
  Ident,
  Number,
  LParen,
  RParen,
  Comma,
  Colon,
  Dot,
  Bang,
  Amp,
  Semi,
  Eq,
  Less,
  LessEq,
  Greater,
  GreaterEq,
  End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

struct SyntaxError {
  SourceSpan span;
  std::string message;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      SourceSpan span{line_, col_};
      if (pos_ >= text_.size()) {
        out.push_back(Token{Tok::End, "", span});
        return out;
      }
      char c = text_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back(Token{Tok::Ident, identifier(), span});
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 ((c == '-' || c == '+') && pos_ + 1 < text_.size() &&
                  std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
        out.push_back(Token{Tok::Number, number(), span});
      } else {
        out.push_back(punct(span));
      }
    }
  }

 private:
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  static bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

  std::string identifier() {
    std::string s;
    while (pos_ < text_.size() && ident_char(text_[pos_])) {
      s += text_[pos_];
      advance();
    }
    // "caused-by" and "canceled-by" are single keywords.
    if ((s == "caused" || s == "canceled") && peek() == '-' && peek(1) == 'b' && peek(2) == 'y' && !ident_char(peek(3))) {
      for (int i = 0; i < 3; ++i) advance();
      s += "-by";
    }
    return s;
  }

  void digits(std::string& s) {
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_];
      advance();
    }
  }

  std::string number() {
    std::string s;
    if (peek() == '-' || peek() == '+') {
      s += peek();
      advance();
    }
    digits(s);
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      s += '.';
      advance();
      digits(s);
    } else if (peek() == '/' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      s += '/';
      advance();
      digits(s);
    }
    return s;
  }

  Token punct(SourceSpan span) {
    char c = peek();
    auto one = [&](Tok k) {
      advance();
      return Token{k, std::string(1, c), span};
    };
    switch (c) {
      case '(': return one(Tok::LParen);
      case ')': return one(Tok::RParen);
      case ',': return one(Tok::Comma);
      case ':': return one(Tok::Colon);
      case '.': return one(Tok::Dot);
      case '!': return one(Tok::Bang);
      case '&': return one(Tok::Amp);
      case ';': return one(Tok::Semi);
      case '=': return one(Tok::Eq);
      case '<':
      case '>':
        if (peek(1) == '=') {
          advance();
          advance();
          return Token{c == '<' ? Tok::LessEq : Tok::GreaterEq, std::string(1, c) + "=", span};
        }
        return one(c == '<' ? Tok::Less : Tok::Greater);
      default: break;
    }
    std::string shown = std::isprint(static_cast<unsigned char>(c)) ? std::string(1, c) : "\\x" + hex(c);
    throw SyntaxError{span, "unexpected character '" + shown + "'"};
  }

  static std::string hex(char c) {
    static const char* digits = "0123456789abcdef";
    auto u = static_cast<unsigned char>(c);
    return {digits[u >> 4], digits[u & 15]};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::set<std::string>& section_keywords() {
  static const std::set<std::string> k{"theory", "objects", "action", "fluent", "temporal", "init", "start"};
  return k;
}

std::optional<Relation> relation_of(Tok k) {
  switch (k) {
    case Tok::Less: return Relation::Less;
    case Tok::LessEq: return Relation::LessEq;
    case Tok::Eq: return Relation::Equal;
    case Tok::GreaterEq: return Relation::GreaterEq;
    case Tok::Greater: return Relation::Greater;
    default: return std::nullopt;
  }
}

using VarSet = std::set<std::string>;

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_word(std::string_view w) const { return at(Tok::Ident) && peek().text == w; }
  bool at_end() const { return at(Tok::End); }

  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }

  [[noreturn]] void fail(const std::string& expected) const {
    throw SyntaxError{peek().span, "expected " + expected + ", found " + describe(peek())};
  }

  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail(what);
    return next();
  }

  void expect_word(std::string_view w) {
    if (!at_word(w)) fail("'" + std::string(w) + "'");
    next();
  }

  bool accept(Tok k) {
    if (!at(k)) return false;
    next();
    return true;
  }

  std::string name(const std::string& what) { return expect(Tok::Ident, what).text; }

  Rational rational(const std::string& what) {
    Token t = expect(Tok::Number, what);
    auto r = parse_rational(t.text);
    if (!r) throw SyntaxError{t.span, "malformed rational '" + t.text + "'"};
    return *r;
  }

  std::vector<Parameter> params() {
    std::vector<Parameter> out;
    if (!accept(Tok::LParen)) return out;
    if (accept(Tok::RParen)) return out;
    do {
      Parameter p;
      p.name = name("parameter name");
      expect(Tok::Colon, "':' after parameter name");
      p.sort = name("sort name");
      out.push_back(std::move(p));
    } while (accept(Tok::Comma));
    expect(Tok::RParen, "')'");
    return out;
  }

  static VarSet scope_of(const std::vector<Parameter>& ps) {
    VarSet s;
    for (const auto& p : ps) s.insert(p.name);
    return s;
  }

  static Term term_for(const std::string& n, const VarSet& scope) {
    return scope.count(n) ? Term::variable(n) : Term::constant(n);
  }

  // Object terms followed by the time, e.g. "(P1, 5)".
  ActionRef action_ref(const VarSet& scope) {
    ActionRef a;
    a.name = name("action name");
    expect(Tok::LParen, "'(' after action name");
    for (;;) {
      if (at(Tok::Number)) {
        a.time = TimePoint(rational("time"));
        break;
      }
      a.args.push_back(term_for(name("object term or time"), scope));
      expect(Tok::Comma, "',' (the last action argument is its time)");
    }
    expect(Tok::RParen, "')'");
    return a;
  }

  std::vector<Term> term_list(const VarSet& scope) {
    std::vector<Term> out;
    if (!accept(Tok::LParen)) return out;
    if (accept(Tok::RParen)) return out;
    do {
      out.push_back(term_for(name("term"), scope));
    } while (accept(Tok::Comma));
    expect(Tok::RParen, "')'");
    return out;
  }

  Formula formula(const VarSet& scope) {
    Formula f = unary(scope);
    while (accept(Tok::Amp)) f = Formula::conjunction(f, unary(scope));
    return f;
  }

  Formula unary(const VarSet& scope) {
    if (accept(Tok::Bang)) return Formula::negation(unary(scope));
    if (accept(Tok::LParen)) {
      Formula f = formula(scope);
      expect(Tok::RParen, "')'");
      return f;
    }
    if (!at(Tok::Ident)) fail("formula");
    const std::string& w = peek().text;
    if (w == "true") {
      next();
      return Formula::truth();
    }
    if (w == "false") {
      next();
      return Formula::negation(Formula::truth());
    }
    if (w == "exists") {
      next();
      std::string var = name("variable");
      expect(Tok::Colon, "':' after quantified variable");
      std::string sort = name("sort");
      expect(Tok::Dot, "'.' after quantifier sort");
      VarSet inner = scope;
      inner.insert(var);
      return Formula::exists(var, sort, formula(inner));
    }
    if (w == "Poss" && peek(1).kind == Tok::LParen) {
      next();
      next();
      ActionRef a = action_ref(scope);
      expect(Tok::RParen, "')'");
      return Formula::poss(std::move(a));
    }
    if (w == "After" && peek(1).kind == Tok::LParen) {
      next();
      next();
      ActionRef a = action_ref(scope);
      expect(Tok::Comma, "',' after action in After");
      Formula body = formula(scope);
      expect(Tok::RParen, "')'");
      return Formula::after(std::move(a), std::move(body));
    }
    std::string sym = next().text;
    return Formula::atom(sym, term_list(scope));
  }

  GroundAtom ground_atom() {
    GroundAtom g;
    g.symbol = name("fluent name");
    if (accept(Tok::LParen) && !accept(Tok::RParen)) {
      do {
        g.args.push_back(name("object"));
      } while (accept(Tok::Comma));
      expect(Tok::RParen, "')'");
    }
    return g;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Pattern arguments that are neither fluent parameters nor declared objects
// are implicitly existential variables; they may also occur in the guard.
Formula rebind(const Formula& f, const VarSet& vars) {
  using K = Formula::Kind;
  auto terms = [&](std::vector<Term> ts) {
    for (auto& t : ts) {
      if (!t.is_variable() && vars.count(t.name)) t = Term::variable(t.name);
    }
    return ts;
  };
  switch (f.kind()) {
    case K::True: return f;
    case K::Atom: return Formula::atom(f.symbol(), terms(f.args()));
    case K::Poss: {
      ActionRef a = f.action();
      a.args = terms(a.args);
      return Formula::poss(a);
    }
    case K::After: {
      ActionRef a = f.action();
      a.args = terms(a.args);
      return Formula::after(a, rebind(f.lhs(), vars));
    }
    case K::Not: return Formula::negation(rebind(f.lhs(), vars));
    case K::And: return Formula::conjunction(rebind(f.lhs(), vars), rebind(f.rhs(), vars));
    case K::Exists: {
      VarSet inner = vars;
      inner.erase(f.symbol());
      return Formula::exists(f.symbol(), f.sort(), rebind(f.lhs(), inner));
    }
  }
  return f;
}

struct InitEntry {
  GroundAtom atom;
  std::optional<bool> truth;
  Rational value;
  SourceSpan span;
};

class TheoryParser : Parser {
 public:
  using Parser::Parser;

  HybridTheory run() {
    if (at_end()) throw SyntaxError{peek().span, "no theory declared"};
    expect_word("theory");
    th_.name = name("theory name");
    while (!at_end()) section();
    resolve_patterns();
    classify_init();
    return std::move(th_);
  }

  std::vector<Diagnostic> late;

 private:
  void section() {
    if (!at(Tok::Ident) || !section_keywords().count(peek().text)) {
      fail("section keyword (objects, action, fluent, temporal, init, start)");
    }
    std::string kw = peek().text;
    if (kw == "theory") throw SyntaxError{peek().span, "only one theory may be declared per file"};
    if (kw == "objects") return objects();
    if (kw == "action") return action();
    if (kw == "fluent") return fluent();
    if (kw == "temporal") return temporal();
    if (kw == "init") return init();
    start();
  }

  bool at_section() const { return at_end() || (at(Tok::Ident) && section_keywords().count(peek().text)); }

  void objects() {
    next();
    expect(Tok::Colon, "':' after 'objects'");
    while (at(Tok::Ident) && !at_section()) {
      ObjectDecl o;
      o.span = peek().span;
      o.name = next().text;
      expect(Tok::Colon, "':' after object name");
      o.sort = name("sort name");
      th_.objects.push_back(std::move(o));
      if (!accept(Tok::Comma)) break;
    }
  }

  void action() {
    next();
    ActionDecl a;
    a.span = peek().span;
    a.name = name("action name");
    a.params = params();
    expect_word("poss");
    expect(Tok::Colon, "':' after 'poss'");
    a.precondition = formula(scope_of(a.params));
    th_.actions.push_back(std::move(a));
  }

  std::vector<Trigger> triggers(const VarSet& scope) {
    next();
    expect(Tok::Colon, "':' after trigger keyword");
    std::vector<Trigger> out;
    do {
      Trigger t;
      t.span = peek().span;
      t.pattern.action = name("action pattern");
      t.pattern.args = term_list(scope);
      if (at_word("when")) {
        next();
        t.guard = formula(scope);
      }
      out.push_back(std::move(t));
    } while (accept(Tok::Comma));
    return out;
  }

  void fluent() {
    next();
    FluentDecl f;
    f.span = peek().span;
    f.name = name("fluent name");
    f.params = params();
    VarSet scope = scope_of(f.params);
    if (at_word("caused-by")) f.ssa.positive = triggers(scope);
    if (at_word("canceled-by")) f.ssa.negative = triggers(scope);
    th_.fluents.push_back(std::move(f));
  }

  void temporal() {
    next();
    TemporalDecl t;
    t.span = peek().span;
    t.name = name("temporal fluent name");
    t.params = params();
    VarSet scope = scope_of(t.params);
    while (at_word("context")) {
      next();
      Context c;
      c.span = peek().span;
      c.label = name("context label");
      expect(Tok::Colon, "':' after context label");
      c.condition = formula(scope);
      expect_word("rate");
      c.rate = rational("rate");
      t.sea.contexts.push_back(std::move(c));
    }
    th_.temporals.push_back(std::move(t));
  }

  void init() {
    next();
    expect(Tok::Colon, "':' after 'init'");
    while (at(Tok::Ident) && !at_section()) {
      InitEntry e;
      e.span = peek().span;
      e.atom = ground_atom();
      expect(Tok::Eq, "'=' in initial value");
      if (at_word("true") || at_word("false")) {
        e.truth = next().text == "true";
      } else {
        e.value = rational("initial value (true, false or a number)");
      }
      init_.push_back(std::move(e));
      if (!accept(Tok::Comma)) break;
    }
  }

  void start() {
    next();
    expect(Tok::Colon, "':' after 'start'");
    th_.initial_start = TimePoint(rational("start time"));
  }

  void resolve_patterns() {
    VarSet objects;
    for (const auto& o : th_.objects) objects.insert(o.name);
    for (auto& f : th_.fluents) {
      for (auto* list : {&f.ssa.positive, &f.ssa.negative}) {
        for (auto& t : *list) {
          VarSet extra;
          for (auto& arg : t.pattern.args) {
            if (!arg.is_variable() && !objects.count(arg.name)) {
              arg = Term::variable(arg.name);
              extra.insert(arg.name);
            }
          }
          if (!extra.empty()) t.guard = rebind(t.guard, extra);
        }
      }
    }
  }

  void classify_init() {
    for (auto& e : init_) {
      if (e.truth) {
        if (th_.find_temporal(e.atom.symbol)) {
          late.push_back({Diagnostic::Kind::Semantic, e.span,
                          "temporal fluent " + to_string(e.atom) + " needs a numeric initial value"});
          continue;
        }
        th_.initial_discrete.push_back(InitialDiscrete{std::move(e.atom), *e.truth, e.span});
      } else {
        if (th_.find_fluent(e.atom.symbol)) {
          late.push_back({Diagnostic::Kind::Semantic, e.span,
                          "discrete fluent " + to_string(e.atom) + " needs a true/false initial value"});
          continue;
        }
        th_.initial_temporal.push_back(InitialTemporal{std::move(e.atom), std::move(e.value), e.span});
      }
    }
  }

  HybridTheory th_;
  std::vector<InitEntry> init_;
};

Diagnostic syntax(const SyntaxError& e) { return Diagnostic{Diagnostic::Kind::Syntax, e.span, e.message}; }

}  // namespace

Parsed<HybridTheory> parse_theory(std::string_view text) {
  Parsed<HybridTheory> out;
  try {
    TheoryParser p(Lexer(text).run());
    HybridTheory th = p.run();
    out.diagnostics = std::move(p.late);
    for (auto& d : validate_theory(th)) out.diagnostics.push_back(std::move(d));
    out.value = std::move(th);
  } catch (const SyntaxError& e) {
    out.diagnostics.push_back(syntax(e));
  }
  return out;
}

Parsed<Scenario> parse_scenario(std::string_view text, const HybridTheory& theory) {
  Parsed<Scenario> out;
  std::vector<ActionTerm> actions;
  try {
    Parser p(Lexer(text).run());
    while (!p.at_end()) {
      if (p.accept(Tok::Semi)) continue;
      SourceSpan span = p.peek().span;
      ActionRef ref = p.action_ref({});
      if (!p.at_end() && !p.at(Tok::Semi)) p.fail("';' between actions");
      ActionTerm a{ref.name, {}, ref.time};
      for (const auto& t : ref.args) a.args.push_back(t.name);
      if (a.is_noop()) {
        if (!a.args.empty()) out.diagnostics.push_back({Diagnostic::Kind::Semantic, span, "noOp takes only a time"});
      } else if (const ActionDecl* decl = theory.find_action(a.name); !decl) {
        out.diagnostics.push_back({Diagnostic::Kind::Semantic, span, "unknown action '" + a.name + "'"});
      } else if (decl->params.size() != a.args.size()) {
        out.diagnostics.push_back({Diagnostic::Kind::Semantic, span,
                                   "arity mismatch: '" + a.name + "' expects " + std::to_string(decl->params.size()) +
                                       " object argument(s) plus a time, got " + std::to_string(a.args.size())});
      } else {
        for (std::size_t i = 0; i < a.args.size(); ++i) {
          auto sort = theory.sort_of(a.args[i]);
          if (!sort) {
            out.diagnostics.push_back({Diagnostic::Kind::Semantic, span, "unknown object '" + a.args[i] + "'"});
          } else if (*sort != decl->params[i].sort) {
            out.diagnostics.push_back({Diagnostic::Kind::Semantic, span,
                                       "object '" + a.args[i] + "' has sort " + *sort + ", expected " +
                                           decl->params[i].sort});
          }
        }
      }
      actions.push_back(std::move(a));
    }
    out.value = Scenario(theory.initial_start, std::move(actions));
  } catch (const SyntaxError& e) {
    out.diagnostics.push_back(syntax(e));
  }
  return out;
}

Parsed<Effect> parse_effect(std::string_view text, const HybridTheory& theory) {
  Parsed<Effect> out;
  try {
    Parser p(Lexer(text).run());
    std::size_t n = 0;
    bool has_relation = false;
    for (; p.peek(n).kind != Tok::End; ++n) {
      if (relation_of(p.peek(n).kind)) has_relation = true;
    }
    if (has_relation) {
      SourceSpan span = p.peek().span;
      GroundAtom atom = p.ground_atom();
      auto rel = relation_of(p.peek().kind);
      if (!rel) {
        if (p.at(Tok::Amp) || p.at(Tok::Bang)) throw SyntaxError{p.peek().span, "compound effects unsupported"};
        p.fail("comparison operator");
      }
      p.next();
      Rational threshold = p.rational("threshold");
      if (!p.at_end()) {
        if (p.at(Tok::Amp)) throw SyntaxError{p.peek().span, "compound effects unsupported"};
        p.fail("end of effect");
      }
      const TemporalDecl* decl = theory.find_temporal(atom.symbol);
      if (!decl) {
        std::string msg = theory.find_fluent(atom.symbol) ? "'" + atom.symbol + "' is a discrete fluent; comparisons need a temporal fluent"
                                                          : "unknown temporal fluent '" + atom.symbol + "'";
        out.diagnostics.push_back({Diagnostic::Kind::Semantic, span, msg});
        return out;
      }
      std::vector<Term> terms;
      for (const auto& a : atom.args) terms.push_back(Term::constant(a));
      if (decl->params.size() != atom.args.size()) {
        out.diagnostics.push_back({Diagnostic::Kind::Semantic, span,
                                   "'" + atom.symbol + "' expects " + std::to_string(decl->params.size()) + " argument(s)"});
        return out;
      }
      for (std::size_t i = 0; i < atom.args.size(); ++i) {
        if (theory.sort_of(atom.args[i]) != decl->params[i].sort) {
          out.diagnostics.push_back({Diagnostic::Kind::Semantic, span,
                                     "argument '" + atom.args[i] + "' is not an object of sort " + decl->params[i].sort});
          return out;
        }
      }
      out.value = Effect{TemporalEffect{std::move(atom), *rel, std::move(threshold)}};
      return out;
    }
    Formula f = p.formula({});
    if (!p.at_end()) p.fail("end of effect");
    auto diags = validate_formula(f, theory, true, {1, 1});
    if (!diags.empty()) {
      out.diagnostics = std::move(diags);
      return out;
    }
    out.value = Effect{instantiate(f, {}, theory)};
  } catch (const SyntaxError& e) {
    out.diagnostics.push_back(syntax(e));
  } catch (const Error& e) {
    out.diagnostics.push_back({Diagnostic::Kind::Semantic, {1, 1}, e.what()});
  }
  return out;
}

namespace {

std::string params_text(const std::vector<Parameter>& ps) {
  std::string out = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += ps[i].name + ": " + ps[i].sort;
  }
  return out + ")";
}

std::string trigger_text(const Trigger& t) {
  std::string out = t.pattern.action + "(";
  for (std::size_t i = 0; i < t.pattern.args.size(); ++i) {
    if (i) out += ", ";
    out += t.pattern.args[i].name;
  }
  out += ")";
  if (t.guard.kind() != Formula::Kind::True) out += " when " + to_string(t.guard);
  return out;
}

void triggers_text(std::ostringstream& os, const char* keyword, const std::vector<Trigger>& ts) {
  if (ts.empty()) return;
  os << "  " << keyword << ":";
  for (std::size_t i = 0; i < ts.size(); ++i) os << (i ? ",\n    " : " ") << trigger_text(ts[i]);
  os << "\n";
}

}  // namespace

std::string serialize_theory(const HybridTheory& th) {
  std::ostringstream os;
  os << "theory " << th.name << "\n";
  if (!th.objects.empty()) {
    os << "\nobjects:";
    for (std::size_t i = 0; i < th.objects.size(); ++i) {
      os << (i ? ", " : " ") << th.objects[i].name << ": " << th.objects[i].sort;
    }
    os << "\n";
  }
  if (!th.actions.empty()) os << "\n";
  for (const auto& a : th.actions) {
    os << "action " << a.name << params_text(a.params) << " poss: " << to_string(a.precondition) << "\n";
  }
  for (const auto& f : th.fluents) {
    os << "\nfluent " << f.name << params_text(f.params) << "\n";
    triggers_text(os, "caused-by", f.ssa.positive);
    triggers_text(os, "canceled-by", f.ssa.negative);
  }
  for (const auto& t : th.temporals) {
    os << "\ntemporal " << t.name << params_text(t.params) << "\n";
    for (const auto& c : t.sea.contexts) {
      os << "  context " << c.label << ": " << to_string(c.condition) << " rate " << to_string(c.rate) << "\n";
    }
  }
  if (!th.initial_discrete.empty() || !th.initial_temporal.empty()) {
    os << "\ninit:";
    bool first = true;
    for (const auto& i : th.initial_discrete) {
      os << (first ? " " : ",\n      ") << to_string(i.atom) << " = " << (i.value ? "true" : "false");
      first = false;
    }
    for (const auto& i : th.initial_temporal) {
      os << (first ? " " : ",\n      ") << to_string(i.atom) << " = " << to_string(i.value);
      first = false;
    }
    os << "\n";
  }
  os << "start: " << to_string(th.initial_start) << "\n";
  return os.str();
}

std::string serialize_scenario(const Scenario& s) {
  std::string out;
  for (std::size_t i = 0; i < s.length(); ++i) {
    if (i) out += "; ";
    out += to_string(s.action_at(i));
  }
  return out;
}

std::string to_string(const Effect& effect) {
  if (const auto* t = std::get_if<TemporalEffect>(&effect)) return to_string(*t);
  return to_string(std::get<Formula>(effect));
}

}  // namespace hycause
