#include "epw/obdd.hpp"

#include "epw/errors.hpp"

#include <algorithm>
#include <functional>
#include <string>
#include <unordered_map>

namespace epw {

namespace {

bool terminal_op(BoolOp op, bool a, bool b) {
  switch (op) {
    case BoolOp::And:
      return a && b;
    case BoolOp::Or:
      return a || b;
    case BoolOp::Xor:
      return a != b;
    case BoolOp::Xnor:
      return a == b;
  }
  return false;
}

void require_same_manager(const Obdd& a, const Obdd& b) {
  if (a.manager() == b.manager()) return;
  if (a.manager()->order() != b.manager()->order()) {
    throw OrderMismatch("diagrams use different variable orders");
  }
  throw OrderMismatch("diagrams belong to different managers");
}

}  // namespace

BddManager::BddManager(std::vector<std::size_t> order) : order_(std::move(order)) {
  const std::size_t n = order_.size();
  level_of_.assign(n + 1, n);
  for (std::size_t level = 0; level < n; ++level) {
    const std::size_t v = order_[level];
    if (v < 1 || v > n || level_of_[v] != n) {
      throw BadOrder("order is not a permutation of 1.." + std::to_string(n));
    }
    level_of_[v] = level;
  }
  const auto terminal_level = static_cast<std::uint32_t>(n);
  nodes_.push_back({terminal_level, kFalseNode, kFalseNode});
  nodes_.push_back({terminal_level, kTrueNode, kTrueNode});
}

std::shared_ptr<BddManager> BddManager::create(std::vector<std::size_t> order) {
  return std::shared_ptr<BddManager>(new BddManager(std::move(order)));
}

std::shared_ptr<BddManager> BddManager::create_identity(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i + 1;
  return create(std::move(order));
}

std::size_t BddManager::level_of(std::size_t var) const {
  if (var < 1 || var > num_vars()) throw UnknownVariable("x" + std::to_string(var));
  return level_of_[var];
}

NodeId BddManager::make_node(std::size_t level, NodeId lo, NodeId hi) {
  if (lo == hi) return lo;
  const UniqueKey key{static_cast<std::uint32_t>(level), lo, hi};
  if (auto it = unique_.find(key); it != unique_.end()) return it->second;
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({key.level, lo, hi});
  unique_.emplace(key, id);
  return id;
}

NodeId BddManager::literal(std::size_t var) {
  return make_node(level_of(var), kFalseNode, kTrueNode);
}

NodeId BddManager::apply(BoolOp op, NodeId a, NodeId b) {
  if (is_terminal(a) && is_terminal(b)) {
    return terminal_op(op, a == kTrueNode, b == kTrueNode) ? kTrueNode : kFalseNode;
  }
  // Operand shortcuts.
  switch (op) {
    case BoolOp::And:
      if (a == kFalseNode || b == kFalseNode) return kFalseNode;
      if (a == kTrueNode) return b;
      if (b == kTrueNode || a == b) return a;
      break;
    case BoolOp::Or:
      if (a == kTrueNode || b == kTrueNode) return kTrueNode;
      if (a == kFalseNode) return b;
      if (b == kFalseNode || a == b) return a;
      break;
    case BoolOp::Xor:
      if (a == b) return kFalseNode;
      if (a == kFalseNode) return b;
      if (b == kFalseNode) return a;
      break;
    case BoolOp::Xnor:
      if (a == b) return kTrueNode;
      if (a == kTrueNode) return b;
      if (b == kTrueNode) return a;
      break;
  }
  if (a > b) std::swap(a, b);  // every op is commutative
  const ApplyKey key{op, a, b};
  if (auto it = apply_cache_.find(key); it != apply_cache_.end()) return it->second;

  const Node na = nodes_[a];
  const Node nb = nodes_[b];
  const std::uint32_t level = std::min(na.level, nb.level);
  const NodeId a_lo = na.level == level ? na.lo : a;
  const NodeId a_hi = na.level == level ? na.hi : a;
  const NodeId b_lo = nb.level == level ? nb.lo : b;
  const NodeId b_hi = nb.level == level ? nb.hi : b;
  const NodeId lo = apply(op, a_lo, b_lo);
  const NodeId hi = apply(op, a_hi, b_hi);
  const NodeId r = make_node(level, lo, hi);
  apply_cache_.emplace(key, r);
  return r;
}

NodeId BddManager::ite(NodeId cond, NodeId then_node, NodeId else_node) {
  const NodeId t = apply(BoolOp::And, cond, then_node);
  const NodeId e = apply(BoolOp::And, negate(cond), else_node);
  return apply(BoolOp::Or, t, e);
}

NodeId BddManager::restrict(NodeId a, std::size_t level, bool value) {
  std::unordered_map<NodeId, NodeId> memo;
  std::function<NodeId(NodeId)> go = [&](NodeId x) -> NodeId {
    const Node nx = nodes_[x];
    if (nx.level > level) return x;
    if (nx.level == level) return value ? nx.hi : nx.lo;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const NodeId r = make_node(nx.level, go(nx.lo), go(nx.hi));
    memo.emplace(x, r);
    return r;
  };
  return go(a);
}

bool BddManager::check_store() const {
  if (unique_.size() + 2 != nodes_.size()) return false;
  for (std::size_t id = 2; id < nodes_.size(); ++id) {
    const Node& nd = nodes_[id];
    if (nd.lo == nd.hi) return false;
    if (nd.level >= num_vars()) return false;
    if (nodes_[nd.lo].level <= nd.level || nodes_[nd.hi].level <= nd.level) return false;
    auto it = unique_.find(UniqueKey{nd.level, nd.lo, nd.hi});
    if (it == unique_.end() || it->second != id) return false;
  }
  return true;
}

std::vector<NodeId> Obdd::reachable_nodes() const {
  std::vector<NodeId> out;
  std::vector<char> seen(mgr_->store_size(), 0);
  std::function<void(NodeId)> visit = [&](NodeId x) {
    if (mgr_->is_terminal(x) || seen[x]) return;
    seen[x] = 1;
    visit(mgr_->node(x).lo);
    visit(mgr_->node(x).hi);
    out.push_back(x);
  };
  visit(root_);
  return out;
}

std::size_t Obdd::node_count() const { return reachable_nodes().size(); }

bool Obdd::evaluate(const GF2Vector& assignment) const {
  if (assignment.size() != num_vars()) {
    throw LengthMismatch("assignment of length " + std::to_string(assignment.size()) +
                         " for a diagram over " + std::to_string(num_vars()) + " variables");
  }
  NodeId x = root_;
  while (!mgr_->is_terminal(x)) {
    const auto& nd = mgr_->node(x);
    x = assignment.get(mgr_->var_at(nd.level) - 1) ? nd.hi : nd.lo;
  }
  return x == kTrueNode;
}

Obdd build(const Formula& f, const std::shared_ptr<BddManager>& manager) {
  if (manager->num_vars() != f.var_count()) {
    throw BadOrder("order over " + std::to_string(manager->num_vars()) +
                   " variables for a formula over " + std::to_string(f.var_count()));
  }
  BddManager& m = *manager;
  std::function<NodeId(const Formula::Node&)> go = [&](const Formula::Node& node) -> NodeId {
    switch (node.kind) {
      case Formula::Kind::Var:
        return m.literal(node.var);
      case Formula::Kind::Not:
        return m.negate(go(*node.left));
      case Formula::Kind::And:
        return m.apply(BoolOp::And, go(*node.left), go(*node.right));
      case Formula::Kind::Or:
        return m.apply(BoolOp::Or, go(*node.left), go(*node.right));
    }
    return kFalseNode;
  };
  return Obdd(manager, go(f.root()));
}

Obdd build(const Formula& f, std::vector<std::size_t> order) {
  return build(f, BddManager::create(std::move(order)));
}

Obdd apply(BoolOp op, const Obdd& a, const Obdd& b) {
  require_same_manager(a, b);
  return Obdd(a.manager(), a.manager()->apply(op, a.root(), b.root()));
}

Obdd negate_inputs(const Obdd& g, const GF2Vector& v) {
  if (v.size() != g.num_vars()) {
    throw LengthMismatch("negation vector of length " + std::to_string(v.size()) +
                         " for a diagram over " + std::to_string(g.num_vars()) + " variables");
  }
  BddManager& m = *g.manager();
  std::unordered_map<NodeId, NodeId> memo;
  std::function<NodeId(NodeId)> go = [&](NodeId x) -> NodeId {
    if (m.is_terminal(x)) return x;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const BddManager::Node nd = m.node(x);
    NodeId lo = go(nd.lo);
    NodeId hi = go(nd.hi);
    if (v.get(m.var_at(nd.level) - 1)) std::swap(lo, hi);
    const NodeId r = m.make_node(nd.level, lo, hi);
    memo.emplace(x, r);
    return r;
  };
  return Obdd(g.manager(), go(g.root()));
}

bool equivalent(const Obdd& a, const Obdd& b) {
  require_same_manager(a, b);
  return a.root() == b.root();
}

BigInt count_models(const Obdd& a, std::size_t n) {
  const BddManager& m = *a.manager();
  const std::size_t k = m.num_vars();
  if (n < k) {
    throw Error("cannot count models over " + std::to_string(n) + " variables for a diagram over " +
                std::to_string(k));
  }
  // Models over the variables at levels >= level(x).
  std::unordered_map<NodeId, BigInt> memo;
  std::function<BigInt(NodeId)> go = [&](NodeId x) -> BigInt {
    if (x == kFalseNode) return 0;
    if (x == kTrueNode) return 1;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const auto& nd = m.node(x);
    const auto gap = [&](NodeId c) {
      return static_cast<unsigned>(m.node(c).level - nd.level - 1);
    };
    BigInt r = (go(nd.lo) << gap(nd.lo)) + (go(nd.hi) << gap(nd.hi));
    memo.emplace(x, r);
    return r;
  };
  BigInt total = go(a.root()) << m.node(a.root()).level;
  return total << static_cast<unsigned>(n - k);
}

Obdd forall_quantify(const Obdd& a, std::span<const std::size_t> vars) {
  BddManager& m = *a.manager();
  std::vector<std::size_t> levels;
  levels.reserve(vars.size());
  for (std::size_t v : vars) levels.push_back(m.level_of(v));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  NodeId r = a.root();
  // Deepest level first keeps the intermediate diagrams small.
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    r = m.apply(BoolOp::And, m.restrict(r, *it, false), m.restrict(r, *it, true));
  }
  return Obdd(a.manager(), r);
}

Obdd compose(const Obdd& src, const std::shared_ptr<BddManager>& target,
             std::span<const NodeId> replacement) {
  const BddManager& s = *src.manager();
  if (replacement.size() != s.num_vars()) {
    throw LengthMismatch("composition needs one replacement per source variable");
  }
  BddManager& t = *target;
  std::unordered_map<NodeId, NodeId> memo;
  std::function<NodeId(NodeId)> go = [&](NodeId x) -> NodeId {
    if (s.is_terminal(x)) return x;
    if (auto it = memo.find(x); it != memo.end()) return it->second;
    const BddManager::Node nd = s.node(x);
    const NodeId cond = replacement[s.var_at(nd.level) - 1];
    const NodeId lo = go(nd.lo);
    const NodeId hi = go(nd.hi);
    const NodeId r = t.ite(cond, hi, lo);
    memo.emplace(x, r);
    return r;
  };
  return Obdd(target, go(src.root()));
}

TruthTable truth_table(const Obdd& a) {
  const std::size_t n = a.num_vars();
  TruthTable t(n);
  for (std::uint64_t u = 0; u < t.size(); ++u) {
    t.set(u, a.evaluate(GF2Vector::from_index(u, n)));
  }
  return t;
}

}  // namespace epw
