#pragma once

#include <memory>
#include <string>
#include <string_view>

#include "rolecheck/model.hpp"
#include "rolecheck/types.hpp"

namespace rolecheck {

struct Cgs;

enum class Op {
  True,
  False,
  Prop,
  Not,
  And,
  Or,
  Implies,
  Next,        // <A> X f
  Globally,    // <A> G f
  Eventually,  // <A> F f
  Until,       // <A> (f U g)
};

// Immutable formula tree. Copies share nodes; equality is structural.
class Formula {
public:
  Formula() : Formula(make_true()) {}

  static Formula make_true();
  static Formula make_false();
  static Formula prop(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula next(Coalition a, Formula f);
  static Formula globally(Coalition a, Formula f);
  static Formula eventually(Coalition a, Formula f);
  static Formula until(Coalition a, Formula f, Formula g);

  Op op() const;
  const std::string& prop_name() const;  // Prop only
  const Coalition& coalition() const;    // strategic operators only
  int arity() const;
  const Formula& child(int i) const;

  bool operator==(const Formula& other) const;

private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Canonical text form; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

// Parses the concrete syntax:
//   atoms: true, false, identifiers
//   boolean: ! f, f & g, f | g, f -> g   (precedence ! > & > | > ->)
//   strategic: <1,2> X f, <> G f, <1> F f, <1,2> (f U g)
// Coalitions also accept <<...>> and the unicode double angle brackets.
// Throws parse_error with input coordinates.
Formula parse_formula(std::string_view text);

// Checks every proposition and coalition agent against the model; returns
// the formula unchanged or throws bind_error listing all problems.
Formula bind(const Formula& f, const Rcgs& m);
Formula bind(const Formula& f, const Cgs& m);

}  // namespace rolecheck
