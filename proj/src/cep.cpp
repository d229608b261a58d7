#include "epw/cep.hpp"

#include "epw/errors.hpp"

#include <algorithm>

namespace epw {

PaddingInstance::PaddingInstance(BigInt target_, BigInt actual_, BigInt total_)
    : target(std::move(target_)), actual(std::move(actual_)), total(std::move(total_)) {
  if (target < 0 || actual < 0 || total < 0) throw InvalidInstance("counts must be nonnegative");
  if (actual > total) throw InvalidInstance("accepting paths exceed total paths");
}

unsigned pad_width(const PaddingInstance& inst) {
  return bit_length(std::max(inst.target, inst.total));
}

BigInt padded_count(const PaddingInstance& inst) {
  return pow2(1 + pad_width(inst)) - inst.target + inst.actual;
}

}  // namespace epw
