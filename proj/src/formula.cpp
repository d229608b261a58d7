#include "epw/formula.hpp"

#include "epw/errors.hpp"

#include <cctype>
#include <functional>

namespace epw {

using Kind = Formula::Kind;
using NodePtr = Formula::NodePtr;

namespace {

void check_vars(const Formula::Node& node, std::size_t n) {
  switch (node.kind) {
    case Kind::Var:
      if (node.var < 1 || node.var > n) {
        throw VariableOutOfRange("x" + std::to_string(node.var) + " with n = " + std::to_string(n));
      }
      return;
    case Kind::Not:
      check_vars(*node.left, n);
      return;
    case Kind::And:
    case Kind::Or:
      check_vars(*node.left, n);
      check_vars(*node.right, n);
      return;
  }
}

bool same_tree(const Formula::Node& a, const Formula::Node& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Kind::Var:
      return a.var == b.var;
    case Kind::Not:
      return same_tree(*a.left, *b.left);
    default:
      return same_tree(*a.left, *b.left) && same_tree(*a.right, *b.right);
  }
}

void render(const Formula::Node& node, std::string& out) {
  switch (node.kind) {
    case Kind::Var:
      out += 'x';
      out += std::to_string(node.var);
      return;
    case Kind::Not:
      out += '!';
      render(*node.left, out);
      return;
    default:
      out += '(';
      render(*node.left, out);
      out += node.kind == Kind::And ? " & " : " | ";
      render(*node.right, out);
      out += ')';
      return;
  }
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  NodePtr expr() {
    NodePtr lhs = term();
    while (accept("|") || accept("∨")) lhs = Formula::disjunction(lhs, term());
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    while (accept("&") || accept("∧")) lhs = Formula::conjunction(lhs, factor());
    return lhs;
  }

  NodePtr factor() {
    if (accept("!") || accept("¬")) return Formula::negation(factor());
    if (accept("(")) {
      NodePtr e = expr();
      if (!accept(")")) fail("expected ')'");
      return e;
    }
    if (accept("x")) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected digits after 'x'");
      const std::string_view digits = text_.substr(start, pos_ - start);
      if (digits.size() > 9) throw VariableOutOfRange("x" + std::string(digits));
      const std::size_t index = std::stoul(std::string(digits));
      if (index < 1 || index > n_) {
        throw VariableOutOfRange("x" + std::to_string(index) + " with n = " + std::to_string(n_));
      }
      return Formula::var(index);
    }
    fail(pos_ < text_.size() ? "unexpected character" : "unexpected end of input");
  }

  bool accept(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(pos_) + " in \"" + std::string(text_) +
                      "\"");
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula::Formula(NodePtr root, std::size_t var_count) : root_(std::move(root)), n_(var_count) {
  if (!root_) throw Error("formula without root");
  check_vars(*root_, n_);
}

NodePtr Formula::var(std::size_t index) {
  return std::make_shared<const Node>(Node{Kind::Var, index, nullptr, nullptr});
}

NodePtr Formula::negation(NodePtr child) {
  return std::make_shared<const Node>(Node{Kind::Not, 0, std::move(child), nullptr});
}

NodePtr Formula::conjunction(NodePtr l, NodePtr r) {
  return std::make_shared<const Node>(Node{Kind::And, 0, std::move(l), std::move(r)});
}

NodePtr Formula::disjunction(NodePtr l, NodePtr r) {
  return std::make_shared<const Node>(Node{Kind::Or, 0, std::move(l), std::move(r)});
}

std::string Formula::to_string() const {
  std::string out;
  render(*root_, out);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  return a.n_ == b.n_ && same_tree(*a.root_, *b.root_);
}

Formula parse_formula(std::string_view text, std::size_t n) {
  if (n < 1) throw Error("formula must be declared over at least one variable");
  return Formula(Parser(text, n).parse(), n);
}

bool evaluate(const Formula& f, const GF2Vector& assignment) {
  if (assignment.size() != f.var_count()) {
    throw LengthMismatch("assignment of length " + std::to_string(assignment.size()) +
                         " for formula over " + std::to_string(f.var_count()) + " variables");
  }
  std::function<bool(const Formula::Node&)> eval = [&](const Formula::Node& node) -> bool {
    switch (node.kind) {
      case Kind::Var:
        return assignment.get(node.var - 1);
      case Kind::Not:
        return !eval(*node.left);
      case Kind::And:
        return eval(*node.left) && eval(*node.right);
      case Kind::Or:
        return eval(*node.left) || eval(*node.right);
    }
    return false;
  };
  return eval(f.root());
}

Formula apply_negation_vector(const Formula& g, const GF2Vector& v) {
  if (v.size() != g.var_count()) {
    throw LengthMismatch("negation vector of length " + std::to_string(v.size()) +
                         " for formula over " + std::to_string(g.var_count()) + " variables");
  }
  // Subtrees without flipped variables are shared with g.
  std::function<NodePtr(const NodePtr&)> rewrite = [&](const NodePtr& node) -> NodePtr {
    switch (node->kind) {
      case Kind::Var:
        return v.get(node->var - 1) ? Formula::negation(node) : node;
      case Kind::Not: {
        NodePtr c = rewrite(node->left);
        return c == node->left ? node : Formula::negation(std::move(c));
      }
      default: {
        NodePtr l = rewrite(node->left);
        NodePtr r = rewrite(node->right);
        if (l == node->left && r == node->right) return node;
        return node->kind == Kind::And ? Formula::conjunction(std::move(l), std::move(r))
                                       : Formula::disjunction(std::move(l), std::move(r));
      }
    }
  };
  return Formula(rewrite(g.root_ptr()), g.var_count());
}

TruthTable truth_table(const Formula& f) {
  const std::size_t n = f.var_count();
  if (n > TruthTable::kMaxVars) {
    throw TooManyVariables(std::to_string(n) + " variables exceeds the truth-table limit of " +
                           std::to_string(TruthTable::kMaxVars));
  }
  std::function<TruthTable(const Formula::Node&)> table = [&](const Formula::Node& node) {
    switch (node.kind) {
      case Kind::Var:
        return TruthTable::projection(n, node.var - 1);
      case Kind::Not:
        return ~table(*node.left);
      case Kind::And:
        return table(*node.left) & table(*node.right);
      case Kind::Or:
        return table(*node.left) | table(*node.right);
    }
    return TruthTable(n);
  };
  return table(f.root());
}

}  // namespace epw
