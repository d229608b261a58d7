#pragma once

#include "epw/formula.hpp"
#include "epw/gf2.hpp"
#include "epw/twodag.hpp"

#include <cstddef>
#include <random>

namespace epw {

using Rng = std::mt19937_64;

GF2Vector random_vector(Rng& rng, std::size_t n);

/// Random formula over n variables with nesting depth at most `max_depth`.
/// With `xor_gadgets`, some binary nodes are (a | b) & !(a & b), which makes
/// nontrivial negation stabilizers common.
Formula random_formula(Rng& rng, std::size_t n, std::size_t max_depth, bool xor_gadgets);

/// Random 2-dag with shared substructure, maxDepth <= max_depth and at most
/// max_nodes nodes.
TwoDag random_dag(Rng& rng, std::size_t max_depth, std::size_t max_nodes);

/// The same dag with its nodes renamed and renumbered at random.
TwoDag relabel(const TwoDag& g, Rng& rng);

}  // namespace epw
