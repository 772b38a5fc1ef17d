#include "hycause/formula.hpp"

namespace hycause {

struct Formula::Node {
  Kind kind = Kind::True;
  std::string symbol;
  std::vector<Term> args;
  ActionRef action;
  std::string sort;
  std::vector<Formula> children;
};

Formula Formula::truth() {
  static const Formula t(std::make_shared<const Node>());
  return t;
}

Formula Formula::atom(std::string fluent, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->symbol = std::move(fluent);
  n->args = std::move(args);
  return Formula(std::move(n));
}

Formula Formula::poss(ActionRef action) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Poss;
  n->action = std::move(action);
  return Formula(std::move(n));
}

Formula Formula::after(ActionRef action, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::After;
  n->action = std::move(action);
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::negation(Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->children.push_back(std::move(lhs));
  n->children.push_back(std::move(rhs));
  return Formula(std::move(n));
}

Formula Formula::exists(std::string variable, std::string sort, Formula body) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Exists;
  n->symbol = std::move(variable);
  n->sort = std::move(sort);
  n->children.push_back(std::move(body));
  return Formula(std::move(n));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return negation(conjunction(negation(std::move(lhs)), negation(std::move(rhs))));
}

Formula::Kind Formula::kind() const { return node_->kind; }
const std::string& Formula::symbol() const { return node_->symbol; }
const std::vector<Term>& Formula::args() const { return node_->args; }
const ActionRef& Formula::action() const { return node_->action; }
const std::string& Formula::sort() const { return node_->sort; }
const Formula& Formula::lhs() const { return node_->children.at(0); }
const Formula& Formula::rhs() const { return node_->children.at(1); }

bool Formula::is_situation_local() const {
  switch (kind()) {
    case Kind::True:
    case Kind::Atom: return true;
    case Kind::Poss:
    case Kind::After: return false;
    case Kind::Not:
    case Kind::Exists: return lhs().is_situation_local();
    case Kind::And: return lhs().is_situation_local() && rhs().is_situation_local();
  }
  return false;
}

namespace {

bool ground_terms(const std::vector<Term>& terms) {
  for (const auto& t : terms) {
    if (t.is_variable()) return false;
  }
  return true;
}

}  // namespace

bool Formula::is_ground() const {
  switch (kind()) {
    case Kind::True: return true;
    case Kind::Atom: return ground_terms(args());
    case Kind::Poss: return ground_terms(action().args);
    case Kind::After: return ground_terms(action().args) && lhs().is_ground();
    case Kind::Not: return lhs().is_ground();
    case Kind::And: return lhs().is_ground() && rhs().is_ground();
    case Kind::Exists: return false;
  }
  return false;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::True: return true;
    case Formula::Kind::Atom: return a.symbol() == b.symbol() && a.args() == b.args();
    case Formula::Kind::Poss: return a.action() == b.action();
    case Formula::Kind::After: return a.action() == b.action() && a.lhs() == b.lhs();
    case Formula::Kind::Not: return a.lhs() == b.lhs();
    case Formula::Kind::And: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::Exists:
      return a.symbol() == b.symbol() && a.sort() == b.sort() && a.lhs() == b.lhs();
  }
  return false;
}

std::string to_string(const Term& t) { return t.name; }

namespace {

std::string args_text(const std::vector<Term>& args) {
  std::string out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += to_string(args[i]);
  }
  return out;
}

// Precedence: 0 = exists (loosest), 1 = conjunction, 2 = unary/atomic.
std::string render(const Formula& f, int context) {
  using K = Formula::Kind;
  switch (f.kind()) {
    case K::True: return "true";
    case K::Atom: return f.symbol() + "(" + args_text(f.args()) + ")";
    case K::Poss: return "Poss(" + to_string(f.action()) + ")";
    case K::After: return "After(" + to_string(f.action()) + ", " + render(f.lhs(), 0) + ")";
    case K::Not: return "!" + render(f.lhs(), 2);
    case K::And: {
      std::string s = render(f.lhs(), 1) + " & " + render(f.rhs(), 2);
      return context > 1 ? "(" + s + ")" : s;
    }
    case K::Exists: {
      std::string s = "exists " + f.symbol() + ": " + f.sort() + ". " + render(f.lhs(), 0);
      return context > 0 ? "(" + s + ")" : s;
    }
  }
  return {};
}

}  // namespace

std::string to_string(const ActionRef& a) {
  std::string out = a.name + "(" + args_text(a.args);
  if (!a.args.empty()) out += ", ";
  return out + to_string(a.time) + ")";
}

std::string to_string(const Formula& f) { return render(f, 0); }

}  // namespace hycause
