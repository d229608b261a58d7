#pragma once

#include "epw/bigint.hpp"
#include "epw/formula.hpp"
#include "epw/gf2.hpp"
#include "epw/truth_table.hpp"

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace epw {

using NodeId = std::uint32_t;
inline constexpr NodeId kFalseNode = 0;
inline constexpr NodeId kTrueNode = 1;

enum class BoolOp { And, Or, Xor, Xnor };

/// Node store and unique table for reduced ordered BDDs under one fixed
/// variable order.
///
/// All diagrams created through one manager share structure, so two of them
/// compute the same function iff their root ids are equal. The store only
/// grows. A manager must not be mutated from more than one thread at a time;
/// finished diagrams may be read concurrently.
class BddManager {
 public:
  struct Node {
    std::uint32_t level;  // position in the order; terminals use num_vars()
    NodeId lo;
    NodeId hi;
  };

  /// `order` lists the 1-based variables from the top level down and must be
  /// a permutation of 1..n. Throws BadOrder.
  static std::shared_ptr<BddManager> create(std::vector<std::size_t> order);
  static std::shared_ptr<BddManager> create_identity(std::size_t n);

  std::size_t num_vars() const { return order_.size(); }
  const std::vector<std::size_t>& order() const { return order_; }
  std::size_t level_of(std::size_t var) const;
  std::size_t var_at(std::size_t level) const { return order_.at(level); }

  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t store_size() const { return nodes_.size(); }
  bool is_terminal(NodeId id) const { return id <= kTrueNode; }

  /// Returns the unique node (level, lo, hi), or lo when lo == hi.
  NodeId make_node(std::size_t level, NodeId lo, NodeId hi);
  /// Single-variable diagram for the 1-based variable `var`.
  NodeId literal(std::size_t var);

  NodeId apply(BoolOp op, NodeId a, NodeId b);
  NodeId negate(NodeId a) { return apply(BoolOp::Xor, a, kTrueNode); }
  NodeId ite(NodeId cond, NodeId then_node, NodeId else_node);
  NodeId restrict(NodeId a, std::size_t level, bool value);

  /// Scans the whole store: every node has distinct children, children sit on
  /// strictly deeper levels, and the unique table has no duplicates.
  bool check_store() const;

 private:
  explicit BddManager(std::vector<std::size_t> order);

  struct ApplyKey {
    BoolOp op;
    NodeId a, b;
    bool operator==(const ApplyKey&) const = default;
  };
  struct ApplyKeyHash {
    std::size_t operator()(const ApplyKey& k) const {
      return (static_cast<std::size_t>(k.a) * 0x9E3779B97F4A7C15ULL) ^
             (static_cast<std::size_t>(k.b) << 2) ^ static_cast<std::size_t>(k.op);
    }
  };
  struct UniqueKey {
    std::uint32_t level;
    NodeId lo, hi;
    bool operator==(const UniqueKey&) const = default;
  };
  struct UniqueKeyHash {
    std::size_t operator()(const UniqueKey& k) const {
      std::size_t h = k.level;
      h = h * 0x100000001B3ULL ^ k.lo;
      h = h * 0x100000001B3ULL ^ k.hi;
      return h;
    }
  };

  std::vector<std::size_t> order_;
  std::vector<std::size_t> level_of_;  // indexed by 1-based variable
  std::vector<Node> nodes_;
  std::unordered_map<UniqueKey, NodeId, UniqueKeyHash> unique_;
  std::unordered_map<ApplyKey, NodeId, ApplyKeyHash> apply_cache_;
};

/// Handle to one diagram inside a manager.
class Obdd {
 public:
  Obdd(std::shared_ptr<BddManager> manager, NodeId root)
      : mgr_(std::move(manager)), root_(root) {}

  const std::shared_ptr<BddManager>& manager() const { return mgr_; }
  NodeId root() const { return root_; }
  std::size_t num_vars() const { return mgr_->num_vars(); }

  bool is_false() const { return root_ == kFalseNode; }
  bool is_true() const { return root_ == kTrueNode; }

  /// Number of decision nodes reachable from the root.
  std::size_t node_count() const;
  /// Reachable decision nodes in an order where children precede parents.
  std::vector<NodeId> reachable_nodes() const;

  bool evaluate(const GF2Vector& assignment) const;

 private:
  std::shared_ptr<BddManager> mgr_;
  NodeId root_;
};

Obdd build(const Formula& f, const std::shared_ptr<BddManager>& manager);
Obdd build(const Formula& f, std::vector<std::size_t> order);

/// Throws OrderMismatch unless both diagrams live in the same manager.
Obdd apply(BoolOp op, const Obdd& a, const Obdd& b);

/// Diagram of u -> g(v XOR u), obtained by swapping the children of every
/// node whose variable is flipped.
Obdd negate_inputs(const Obdd& g, const GF2Vector& v);

bool equivalent(const Obdd& a, const Obdd& b);

/// Satisfying assignments over n >= a.num_vars() variables.
BigInt count_models(const Obdd& a, std::size_t n);

/// Universal quantification over the given 1-based variables.
Obdd forall_quantify(const Obdd& a, std::span<const std::size_t> vars);

/// Substitutes `replacement[i]` (living in `target`) for variable x_{i+1} of
/// `src`. The result lives in `target`.
Obdd compose(const Obdd& src, const std::shared_ptr<BddManager>& target,
             std::span<const NodeId> replacement);

TruthTable truth_table(const Obdd& a);

}  // namespace epw
