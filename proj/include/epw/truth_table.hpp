#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace epw {

/// Truth table of a function of n variables, packed 64 entries per word.
/// Entry u (bit i of u = value of x_{i+1}) is the function value on u.
class TruthTable {
 public:
  static constexpr std::size_t kMaxVars = 24;

  TruthTable() = default;
  /// Constant-zero table; throws TooManyVariables above kMaxVars.
  explicit TruthTable(std::size_t num_vars);

  static TruthTable constant(std::size_t num_vars, bool value);
  /// Projection onto x_{index+1} (0-based index).
  static TruthTable projection(std::size_t num_vars, std::size_t index);

  std::size_t num_vars() const { return n_; }
  std::size_t size() const { return std::size_t{1} << n_; }
  bool get(std::uint64_t u) const { return (words_[u >> 6] >> (u & 63)) & 1u; }
  void set(std::uint64_t u, bool v);
  std::size_t count_ones() const;

  /// Replaces the table of f by the table of u -> f(u XOR e_index).
  void flip_input(std::size_t index);

  TruthTable operator~() const;
  TruthTable& operator&=(const TruthTable& o);
  TruthTable& operator|=(const TruthTable& o);
  TruthTable& operator^=(const TruthTable& o);
  friend TruthTable operator&(TruthTable a, const TruthTable& b) { return a &= b; }
  friend TruthTable operator|(TruthTable a, const TruthTable& b) { return a |= b; }
  friend TruthTable operator^(TruthTable a, const TruthTable& b) { return a ^= b; }

  friend bool operator==(const TruthTable&, const TruthTable&) = default;

 private:
  void mask_tail();
  void check_same(const TruthTable& o) const;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace epw
