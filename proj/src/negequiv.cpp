#include "epw/negequiv.hpp"

#include "epw/errors.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <string>

namespace epw {

namespace {

void check_brute_size(std::size_t n) {
  if (n > TruthTable::kMaxVars) {
    throw TooManyVariables(std::to_string(n) + " variables exceeds the brute-force limit of " +
                           std::to_string(TruthTable::kMaxVars));
  }
}

// All v with f == g_v, in increasing index order. Walks v in Gray-code order
// so each step flips a single input of the running table.
std::vector<GF2Vector> witness_points(const TruthTable& f, const TruthTable& g) {
  if (f.num_vars() != g.num_vars()) throw VariableCountMismatch("truth tables over different n");
  const std::size_t n = g.num_vars();
  check_brute_size(n);
  std::vector<GF2Vector> out;
  TruthTable cur = g;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t k = 0; k < total; ++k) {
    if (k > 0) cur.flip_input(static_cast<std::size_t>(std::countr_zero(k)));
    if (cur == f) out.push_back(GF2Vector::from_index(k ^ (k >> 1), n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

GF2Basis subspace_from_points(const std::vector<GF2Vector>& points, std::size_t n) {
  GF2Basis basis = echelon_basis(points, n);
  if (basis.dim() >= 63 || points.size() != (std::size_t{1} << basis.dim())) {
    throw NotACoset("stabilizer with " + std::to_string(points.size()) +
                    " elements is not closed under XOR (span dimension " +
                    std::to_string(basis.dim()) + ")");
  }
  return basis;
}

void check_coset_of(const AffineSet& witnesses, const GF2Basis& stabilizer) {
  if (!witnesses.empty() && !(witnesses.basis() == stabilizer)) {
    throw NotACoset("witness set is not a coset of the stabilizer");
  }
}

NegEquivReport make_report(AffineSet witnesses, const GF2Basis& stabilizer, Method method) {
  check_coset_of(witnesses, stabilizer);
  NegEquivReport r;
  r.witness_count = coset_cardinality(witnesses);
  r.equivalent = r.witness_count >= 1;
  r.stabilizer_dim = stabilizer.dim();
  r.power_of_two_or_zero = r.witness_count == 0 || is_power_of_two(r.witness_count);
  r.witnesses = std::move(witnesses);
  r.method = method;
  if (r.equivalent && r.witness_count != pow2(static_cast<unsigned>(r.stabilizer_dim))) {
    throw NotACoset("witness count differs from 2^dim of the stabilizer");
  }
  if (!r.power_of_two_or_zero) throw NotACoset("witness count is neither 0 nor a power of two");
  return r;
}

}  // namespace

const char* to_string(Method m) { return m == Method::Brute ? "brute" : "symbolic"; }

GF2Basis self_stabilizer(const TruthTable& g) {
  return subspace_from_points(witness_points(g, g), g.num_vars());
}

GF2Basis self_stabilizer(const Formula& g, std::size_t n) {
  if (g.var_count() != n) throw VariableCountMismatch("formula is not declared over n variables");
  check_brute_size(n);
  return self_stabilizer(truth_table(g));
}

AffineSet witnesses_brute(const TruthTable& f, const TruthTable& g) {
  AffineSet w = affine_from_points(witness_points(f, g));
  check_coset_of(w, self_stabilizer(g));
  return w;
}

AffineSet witnesses_brute(const Formula& f, const Formula& g, std::size_t n) {
  if (f.var_count() != n || g.var_count() != n) {
    throw VariableCountMismatch("formulas must both be declared over n = " + std::to_string(n));
  }
  check_brute_size(n);
  return witnesses_brute(truth_table(f), truth_table(g));
}

std::vector<GF2Vector> SymbolicWitnesses::models() const {
  const BddManager& m = *witness.manager();
  const std::size_t n = num_vars;
  std::vector<GF2Vector> out;
  GF2Vector cur(n);
  // Walk the v-levels of the combined order (even levels); skipped levels are
  // free variables.
  std::function<void(NodeId, std::size_t)> walk = [&](NodeId x, std::size_t level) {
    if (x == kFalseNode) return;
    if (level >= 2 * n) {
      out.push_back(cur);
      return;
    }
    const std::size_t bit = (m.var_at(level) + 1) / 2 - 1;
    const auto& nd = m.node(x);
    if (nd.level > level) {
      for (bool b : {false, true}) {
        cur.set(bit, b);
        walk(x, level + 2);
      }
      cur.set(bit, false);
      return;
    }
    cur.set(bit, false);
    walk(nd.lo, level + 2);
    cur.set(bit, true);
    walk(nd.hi, level + 2);
    cur.set(bit, false);
  };
  walk(witness.root(), 0);
  std::sort(out.begin(), out.end());
  return out;
}

SymbolicWitnesses witnesses_symbolic(const Obdd& f, const Obdd& g) {
  if (f.manager() != g.manager()) {
    throw OrderMismatch(f.manager()->order() == g.manager()->order()
                            ? "diagrams belong to different managers"
                            : "diagrams use different variable orders");
  }
  const BddManager& src = *f.manager();
  const std::size_t n = src.num_vars();
  std::vector<std::size_t> combined_order;
  combined_order.reserve(2 * n);
  for (std::size_t var : src.order()) {
    combined_order.push_back(2 * var - 1);  // v_var
    combined_order.push_back(2 * var);      // u_var
  }
  auto combined = BddManager::create(std::move(combined_order));
  std::vector<NodeId> u_lits(n);
  std::vector<NodeId> shifted(n);
  std::vector<std::size_t> u_vars(n);
  for (std::size_t i = 1; i <= n; ++i) {
    const NodeId v = combined->literal(2 * i - 1);
    const NodeId u = combined->literal(2 * i);
    u_lits[i - 1] = u;
    shifted[i - 1] = combined->apply(BoolOp::Xor, v, u);
    u_vars[i - 1] = 2 * i;
  }
  const Obdd fu = compose(f, combined, u_lits);
  const Obdd gvu = compose(g, combined, shifted);
  const Obdd agree = apply(BoolOp::Xnor, fu, gvu);
  Obdd witness = forall_quantify(agree, u_vars);
  BigInt count = count_models(witness, 2 * n) >> static_cast<unsigned>(n);
  return SymbolicWitnesses{std::move(witness), std::move(count), n};
}

AffineSet witness_set(const SymbolicWitnesses& w) {
  const auto pts = w.models();
  if (BigInt(pts.size()) != w.count) {
    throw InvariantViolation("symbolic model enumeration disagrees with the model count");
  }
  return affine_from_points(pts);
}

GF2Basis self_stabilizer(const Obdd& g) {
  const auto w = witnesses_symbolic(g, g);
  return subspace_from_points(w.models(), g.num_vars());
}

NegEquivReport decide_negation_equivalence(const Formula& f, const Formula& g, std::size_t n,
                                           Method method) {
  if (f.var_count() != n || g.var_count() != n) {
    throw VariableCountMismatch("formulas declared over " + std::to_string(f.var_count()) + " and " +
                                std::to_string(g.var_count()) + " variables, expected " +
                                std::to_string(n));
  }
  if (method == Method::Brute) {
    check_brute_size(n);
    const TruthTable tf = truth_table(f);
    const TruthTable tg = truth_table(g);
    return make_report(affine_from_points(witness_points(tf, tg)), self_stabilizer(tg), method);
  }
  auto manager = BddManager::create_identity(n);
  return decide_negation_equivalence(build(f, manager), build(g, manager), method);
}

NegEquivReport decide_negation_equivalence(const Obdd& f, const Obdd& g, Method method) {
  if (f.num_vars() != g.num_vars()) {
    throw VariableCountMismatch("diagrams over " + std::to_string(f.num_vars()) + " and " +
                                std::to_string(g.num_vars()) + " variables");
  }
  if (method == Method::Brute) {
    check_brute_size(f.num_vars());
    const TruthTable tf = truth_table(f);
    const TruthTable tg = truth_table(g);
    return make_report(affine_from_points(witness_points(tf, tg)), self_stabilizer(tg), method);
  }
  const auto w = witnesses_symbolic(f, g);
  return make_report(witness_set(w), self_stabilizer(g), method);
}

}  // namespace epw
