#include "epw/truth_table.hpp"

#include "epw/errors.hpp"

#include <bit>
#include <string>
#include <utility>

namespace epw {

namespace {

// Entries whose index has bit i clear, for i < 6.
constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

}  // namespace

TruthTable::TruthTable(std::size_t num_vars) : n_(num_vars) {
  if (num_vars > kMaxVars) {
    throw TooManyVariables(std::to_string(num_vars) + " variables exceeds the truth-table limit of " +
                           std::to_string(kMaxVars));
  }
  words_.assign(num_vars >= 6 ? (std::size_t{1} << (num_vars - 6)) : 1, 0);
}

TruthTable TruthTable::constant(std::size_t num_vars, bool value) {
  TruthTable t(num_vars);
  if (value) {
    for (auto& w : t.words_) w = ~std::uint64_t{0};
    t.mask_tail();
  }
  return t;
}

TruthTable TruthTable::projection(std::size_t num_vars, std::size_t index) {
  if (index >= num_vars) throw VariableOutOfRange("projection index " + std::to_string(index));
  TruthTable t(num_vars);
  if (index < 6) {
    for (auto& w : t.words_) w = ~kLowHalf[index];
  } else {
    const std::size_t stride = std::size_t{1} << (index - 6);
    for (std::size_t k = 0; k < t.words_.size(); ++k) {
      if (k & stride) t.words_[k] = ~std::uint64_t{0};
    }
  }
  t.mask_tail();
  return t;
}

void TruthTable::set(std::uint64_t u, bool v) {
  const std::uint64_t m = std::uint64_t{1} << (u & 63);
  if (v) {
    words_[u >> 6] |= m;
  } else {
    words_[u >> 6] &= ~m;
  }
}

std::size_t TruthTable::count_ones() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void TruthTable::flip_input(std::size_t index) {
  if (index >= n_) throw VariableOutOfRange("flip index " + std::to_string(index));
  if (index < 6) {
    const unsigned shift = 1u << index;
    const std::uint64_t lo = kLowHalf[index];
    for (auto& w : words_) w = ((w & lo) << shift) | ((w >> shift) & lo);
  } else {
    const std::size_t stride = std::size_t{1} << (index - 6);
    for (std::size_t k = 0; k < words_.size(); ++k) {
      if (!(k & stride)) std::swap(words_[k], words_[k | stride]);
    }
  }
}

TruthTable TruthTable::operator~() const {
  TruthTable t = *this;
  for (auto& w : t.words_) w = ~w;
  t.mask_tail();
  return t;
}

TruthTable& TruthTable::operator&=(const TruthTable& o) {
  check_same(o);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
  return *this;
}

TruthTable& TruthTable::operator|=(const TruthTable& o) {
  check_same(o);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
  return *this;
}

TruthTable& TruthTable::operator^=(const TruthTable& o) {
  check_same(o);
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  return *this;
}

void TruthTable::mask_tail() {
  if (n_ < 6) words_[0] &= (std::uint64_t{1} << (std::size_t{1} << n_)) - 1;
}

void TruthTable::check_same(const TruthTable& o) const {
  if (o.n_ != n_) throw LengthMismatch("truth tables over different variable counts");
}

}  // namespace epw
