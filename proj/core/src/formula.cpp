#include "rolecheck/formula.hpp"

#include <sstream>
#include <vector>

#include "rolecheck/cgs.hpp"

namespace rolecheck {

struct Formula::Node {
  Op op;
  std::string prop;
  Coalition coal;
  std::vector<Formula> kids;
};

Formula Formula::make_true() {
  return Formula(std::make_shared<const Node>(Node{Op::True, {}, {}, {}}));
}
Formula Formula::make_false() {
  return Formula(std::make_shared<const Node>(Node{Op::False, {}, {}, {}}));
}
Formula Formula::prop(std::string name) {
  return Formula(std::make_shared<const Node>(Node{Op::Prop, std::move(name), {}, {}}));
}
Formula Formula::negation(Formula f) {
  return Formula(std::make_shared<const Node>(Node{Op::Not, {}, {}, {std::move(f)}}));
}
Formula Formula::conjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Op::And, {}, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::disjunction(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Op::Or, {}, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::implication(Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{Op::Implies, {}, {}, {std::move(a), std::move(b)}}));
}
Formula Formula::next(Coalition a, Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Op::Next, {}, std::move(a), {std::move(f)}}));
}
Formula Formula::globally(Coalition a, Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Op::Globally, {}, std::move(a), {std::move(f)}}));
}
Formula Formula::eventually(Coalition a, Formula f) {
  return Formula(std::make_shared<const Node>(
      Node{Op::Eventually, {}, std::move(a), {std::move(f)}}));
}
Formula Formula::until(Coalition a, Formula f, Formula g) {
  return Formula(std::make_shared<const Node>(
      Node{Op::Until, {}, std::move(a), {std::move(f), std::move(g)}}));
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::prop_name() const { return node_->prop; }
const Coalition& Formula::coalition() const { return node_->coal; }
int Formula::arity() const { return static_cast<int>(node_->kids.size()); }
const Formula& Formula::child(int i) const {
  return node_->kids[static_cast<size_t>(i)];
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->op != other.node_->op) return false;
  if (node_->prop != other.node_->prop) return false;
  if (node_->coal != other.node_->coal) return false;
  if (node_->kids.size() != other.node_->kids.size()) return false;
  for (size_t i = 0; i < node_->kids.size(); ++i)
    if (!(node_->kids[i] == other.node_->kids[i])) return false;
  return true;
}

namespace {

// Binding strength, tightest first: atoms/unary, &, |, ->.
int precedence(Op op) {
  switch (op) {
    case Op::Implies: return 1;
    case Op::Or: return 2;
    case Op::And: return 3;
    default: return 4;
  }
}

void print_coalition(std::ostringstream& os, const Coalition& c) {
  os << '<';
  for (size_t i = 0; i < c.members.size(); ++i) {
    if (i) os << ',';
    os << c.members[i];
  }
  os << '>';
}

void print_rec(std::ostringstream& os, const Formula& f, int parent_prec) {
  int prec = precedence(f.op());
  bool parens = prec < parent_prec;
  if (parens) os << '(';
  switch (f.op()) {
    case Op::True: os << "true"; break;
    case Op::False: os << "false"; break;
    case Op::Prop: os << f.prop_name(); break;
    case Op::Not:
      os << '!';
      print_rec(os, f.child(0), 4);
      break;
    case Op::And:
      // Left associative: a right-nested & needs its parens kept.
      print_rec(os, f.child(0), 3);
      os << " & ";
      print_rec(os, f.child(1), 4);
      break;
    case Op::Or:
      print_rec(os, f.child(0), 2);
      os << " | ";
      print_rec(os, f.child(1), 3);
      break;
    case Op::Implies:
      // Right associative: the left side needs parens when it is itself ->.
      print_rec(os, f.child(0), 2);
      os << " -> ";
      print_rec(os, f.child(1), 1);
      break;
    case Op::Next:
    case Op::Globally:
    case Op::Eventually: {
      print_coalition(os, f.coalition());
      os << (f.op() == Op::Next ? " X " : f.op() == Op::Globally ? " G " : " F ");
      print_rec(os, f.child(0), 4);
      break;
    }
    case Op::Until: {
      print_coalition(os, f.coalition());
      os << " (";
      print_rec(os, f.child(0), 0);
      os << " U ";
      print_rec(os, f.child(1), 0);
      os << ')';
      break;
    }
  }
  if (parens) os << ')';
}

void collect_bind_issues(const Formula& f, int agent_count,
                         const std::vector<std::string>& props,
                         std::vector<std::string>& issues) {
  switch (f.op()) {
    case Op::Prop: {
      bool known = false;
      for (const std::string& p : props)
        if (p == f.prop_name()) known = true;
      if (!known) issues.push_back("unknown proposition '" + f.prop_name() + "'");
      break;
    }
    case Op::Next:
    case Op::Globally:
    case Op::Eventually:
    case Op::Until:
      for (Agent a : f.coalition().members)
        if (a < 1 || a > agent_count)
          issues.push_back("agent " + std::to_string(a) + " out of range 1.." +
                           std::to_string(agent_count));
      break;
    default:
      break;
  }
  for (int i = 0; i < f.arity(); ++i)
    collect_bind_issues(f.child(i), agent_count, props, issues);
}

Formula bind_against(const Formula& f, int agent_count,
                     const std::vector<std::string>& props) {
  std::vector<std::string> issues;
  collect_bind_issues(f, agent_count, props, issues);
  if (!issues.empty()) {
    std::string msg = "formula does not fit the model:";
    for (const std::string& s : issues) msg += "\n  " + s;
    throw bind_error(msg);
  }
  return f;
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::ostringstream os;
  print_rec(os, f, 0);
  return os.str();
}

Formula bind(const Formula& f, const Rcgs& m) {
  return bind_against(f, m.agent_count, m.props);
}

Formula bind(const Formula& f, const Cgs& m) {
  return bind_against(f, m.agent_count, m.props);
}

}  // namespace rolecheck
