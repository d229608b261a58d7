#pragma once

#include "epw/bigint.hpp"

namespace epw {

/// Counts of one C=P-style computation: the machine accepts iff its number of
/// accepting paths equals the target.
struct PaddingInstance {
  BigInt target;  // f(x)
  BigInt actual;  // g(x), accepting paths of the simulated machine
  BigInt total;   // all paths of the simulated machine, >= actual

  /// Throws InvalidInstance unless 0 <= target and 0 <= actual <= total.
  PaddingInstance(BigInt target, BigInt actual, BigInt total);
};

/// Smallest w with 2^w > max(target, total).
unsigned pad_width(const PaddingInstance& inst);

/// 2^(1+w) - target + actual: lies strictly between 2^w and 2^(w+2), and is a
/// power of two exactly when actual == target.
BigInt padded_count(const PaddingInstance& inst);

// is_power_of_two(const BigInt&) is declared in epw/bigint.hpp.

}  // namespace epw
