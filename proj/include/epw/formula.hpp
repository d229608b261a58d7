#pragma once

#include "epw/gf2.hpp"
#include "epw/truth_table.hpp"

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

namespace epw {

/// Immutable boolean formula over x1..xn built from NOT, AND, OR.
///
/// Variables are 1-based in the surface syntax and in `Node::var`; in
/// assignments and negation vectors x_i is bit i-1.
class Formula {
 public:
  enum class Kind { Var, Not, And, Or };

  struct Node {
    Kind kind;
    std::size_t var = 0;  // 1-based, Kind::Var only
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  using NodePtr = std::shared_ptr<const Node>;

  Formula(NodePtr root, std::size_t var_count);

  static NodePtr var(std::size_t index);
  static NodePtr negation(NodePtr child);
  static NodePtr conjunction(NodePtr l, NodePtr r);
  static NodePtr disjunction(NodePtr l, NodePtr r);

  const Node& root() const { return *root_; }
  const NodePtr& root_ptr() const { return root_; }
  std::size_t var_count() const { return n_; }

  /// Renders with ASCII operators and full parenthesization of binary nodes.
  std::string to_string() const;

  /// Structural (syntactic) equality of the trees and variable counts.
  friend bool operator==(const Formula& a, const Formula& b);

 private:
  NodePtr root_;
  std::size_t n_;
};

/// Recursive-descent parser. Grammar (whitespace insignificant):
///   expr   := term   { ("|" | "∨") term }
///   term   := factor { ("&" | "∧") factor }
///   factor := ("!" | "¬") factor | "(" expr ")" | "x" digits
Formula parse_formula(std::string_view text, std::size_t n);

bool evaluate(const Formula& f, const GF2Vector& assignment);

/// Replaces x_i by NOT x_i wherever v has bit i-1 set.
Formula apply_negation_vector(const Formula& g, const GF2Vector& v);

TruthTable truth_table(const Formula& f);

}  // namespace epw
