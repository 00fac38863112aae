#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace bltk {

/// Propositional basic-logic formula. Core connectives are bottom, & and ->;
/// negation, meet, join, biconditional and top are sugar that `desugar`
/// rewrites into the core:
///   !f       = f -> 0
///   f ^ g    = f & (f -> g)
///   f | g    = ((f -> g) -> g) ^ ((g -> f) -> f)
///   f <-> g  = (f -> g) & (g -> f)
///   1        = 0 -> 0
class Formula {
 public:
  enum class Kind { Atom, Bottom, Top, Conj, Impl, Neg, Meet, Join, Iff };

  static Formula atom(std::string name);
  static Formula bottom();
  static Formula top();
  static Formula conj(Formula a, Formula b);
  static Formula impl(Formula a, Formula b);
  static Formula neg(Formula a);
  static Formula meet(Formula a, Formula b);
  static Formula join(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);

  Kind kind() const;
  const std::string& name() const;  // atoms only
  const Formula& lhs() const;       // binary nodes, and the operand of Neg
  const Formula& rhs() const;       // binary nodes

  bool is_binary() const;
  /// No sugar anywhere in the tree.
  bool is_core() const;
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Grammar, loosest to tightest:
///   '->' (right-assoc) and '<->' (non-assoc), one tier
///   '^' and '|', one tier, left-assoc
///   '&', left-assoc
///   '!' prefix
///   atoms [a-z][a-zA-Z0-9_]*, '0', '1', parentheses
/// Throws SyntaxError with ErrorCode SyntaxError, UnbalancedParens or UnknownToken.
Formula parse_formula(std::string_view text);

/// Minimal-parenthesis rendering; parse_formula(print_formula(f)) == f.
std::string print_formula(const Formula& f);

Formula desugar(const Formula& f);

/// Distinct atom names in order of first occurrence.
std::vector<std::string> atoms_of(const Formula& f);

}  // namespace bltk
