#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "interlab/errors.hpp"
#include "interlab/model_space.hpp"

namespace interlab {

enum class Op { kAtom, kTop, kBottom, kNot, kJ, kAnd, kOr, kImplies, kIff };

/// Immutable propositional syntax tree. Subtrees are shared, copies are cheap.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula top();
  static Formula bottom();
  static Formula negation(Formula f);
  /// J f: "from the next moment onwards f holds".
  static Formula next(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);

  /// Left-nested conjunction/disjunction; empty lists give top/bottom.
  static Formula conjunction(const std::vector<Formula>& fs);
  static Formula disjunction(const std::vector<Formula>& fs);

  Op op() const noexcept { return node_->op; }
  const std::string& name() const noexcept { return node_->name; }
  std::size_t arity() const noexcept { return node_->children.size(); }
  const Formula& child(std::size_t i) const { return node_->children.at(i); }

  CoordSet atoms() const;
  std::size_t depth() const;

  /// Rendering in the parser's grammar with minimal parentheses.
  std::string to_string() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Op op;
    std::string name;
    std::vector<Formula> children;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static Formula make(Op op, std::string name, std::vector<Formula> children);

  std::shared_ptr<const Node> node_;
};

/// Parses `text` with precedence  ! J  >  &  >  |  >  ->  >  <->.
/// `->` is right-associative; `&`, `|` and `<->` associate to the left.
Formula parse_formula(std::string_view text);

}  // namespace interlab
