#pragma once

#include "epw/bigint.hpp"
#include "epw/formula.hpp"
#include "epw/gf2.hpp"
#include "epw/obdd.hpp"
#include "epw/truth_table.hpp"

#include <cstddef>
#include <vector>

namespace epw {

enum class Method { Brute, Symbolic };

const char* to_string(Method m);

/// Outcome of a negation (or interchange) equivalence check together with
/// the full witness set.
struct NegEquivReport {
  bool equivalent = false;
  AffineSet witnesses;
  BigInt witness_count = 0;
  /// Dimension of the stabilizer of the second argument.
  std::size_t stabilizer_dim = 0;
  bool power_of_two_or_zero = true;
  Method method = Method::Brute;
};

// -- Brute force (truth tables, n <= 24) -----------------------------------

/// Every v with g(v XOR u) = g(u) for all u, checked to be a subspace.
GF2Basis self_stabilizer(const TruthTable& g);
GF2Basis self_stabilizer(const Formula& g, std::size_t n);

/// {v : f(u) = g(v XOR u) for all u}, checked to be empty or a coset of the
/// stabilizer of g. Throws NotACoset if that structure fails.
AffineSet witnesses_brute(const TruthTable& f, const TruthTable& g);
AffineSet witnesses_brute(const Formula& f, const Formula& g, std::size_t n);

// -- Symbolic (OBDD) --------------------------------------------------------

/// Witness predicate as a diagram over the v-variables of a combined manager.
///
/// The combined manager has 2n variables: v_i is variable 2i-1 and u_i is
/// variable 2i, placed next to each other following the order of the input
/// manager.
struct SymbolicWitnesses {
  Obdd witness;
  BigInt count;
  std::size_t num_vars;

  /// Satisfying negation vectors, sorted.
  std::vector<GF2Vector> models() const;
};

/// forall u: f(u) XNOR g(v XOR u). Requires f and g in one manager.
SymbolicWitnesses witnesses_symbolic(const Obdd& f, const Obdd& g);

/// Witness set of a symbolic run, checked to be empty or a coset.
AffineSet witness_set(const SymbolicWitnesses& w);

GF2Basis self_stabilizer(const Obdd& g);

// -- Decision ---------------------------------------------------------------

/// Throws VariableCountMismatch unless both formulas are declared over n
/// variables.
NegEquivReport decide_negation_equivalence(const Formula& f, const Formula& g, std::size_t n,
                                           Method method);
NegEquivReport decide_negation_equivalence(const Obdd& f, const Obdd& g, Method method);

}  // namespace epw
