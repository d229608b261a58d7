#pragma once

#include "epw/bigint.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace epw {

/// A set of positive integers with a membership test and an enumerator.
///
/// `next_geq` and `print_up_to` make the set usable as the target of the
/// accepting-path amplifier; `gap_constant` is a k for which every member n
/// has a larger member m <= k*n, when the set is known to have one.
class AcceptanceSet {
 public:
  virtual ~AcceptanceSet() = default;

  virtual std::string name() const = 0;
  virtual bool contains(const BigInt& n) const = 0;
  /// Least member >= n. Throws SetExhausted for finite sets.
  virtual BigInt next_geq(const BigInt& n) const = 0;
  virtual std::optional<BigInt> gap_constant() const { return std::nullopt; }

  /// Throws EmptySet if the set has no members.
  BigInt least_element() const { return next_geq(1); }
  /// Members <= bound, ascending.
  std::vector<BigInt> print_up_to(const BigInt& bound) const;
};

/// {q^i : i >= 0}. q = 2 is the acceptance set of EP.
class PowersOf final : public AcceptanceSet {
 public:
  explicit PowersOf(unsigned q);
  std::string name() const override;
  bool contains(const BigInt& n) const override;
  BigInt next_geq(const BigInt& n) const override;
  std::optional<BigInt> gap_constant() const override { return BigInt(q_); }

 private:
  unsigned q_;
};

/// Positive integers not divisible by k (acceptance for ModZ_kP).
class NonMultiplesOf final : public AcceptanceSet {
 public:
  explicit NonMultiplesOf(unsigned k);
  std::string name() const override;
  bool contains(const BigInt& n) const override;
  BigInt next_geq(const BigInt& n) const override;
  std::optional<BigInt> gap_constant() const override;

 private:
  unsigned k_;
};

/// {2^(2^i) : i >= 0} = {2, 4, 16, 256, 65536, ...}; gappy.
class DoublyExponential final : public AcceptanceSet {
 public:
  std::string name() const override { return "dexp"; }
  bool contains(const BigInt& n) const override;
  BigInt next_geq(const BigInt& n) const override;
};

class ExplicitFinite final : public AcceptanceSet {
 public:
  explicit ExplicitFinite(std::vector<BigInt> members, std::string label = "finite");
  std::string name() const override { return label_; }
  bool contains(const BigInt& n) const override;
  BigInt next_geq(const BigInt& n) const override;

 private:
  std::vector<BigInt> members_;
  std::string label_;
};

/// Parses "pow2", "pow4", "pow:q", "nonmult:k", "dexp", "file:path" (the
/// file holds whitespace-separated positive integers).
std::shared_ptr<const AcceptanceSet> make_acceptance_set(std::string_view spec);

BigInt binomial(unsigned n, unsigned k);

struct NonGappyVerdict {
  bool pass = true;
  BigInt k;
  BigInt bound;
  std::vector<BigInt> violations;  // members n <= bound with no member in (n, k*n]
};

/// Bounded check of the non-gappy property with constant k: every member
/// n <= bound needs a member m with n < m <= k*n. Throws EmptySet.
NonGappyVerdict check_non_gappy(const AcceptanceSet& s, const BigInt& k, const BigInt& bound);

/// Constants of the accepting-path amplifier, 1-based: entries at index 0
/// are unused, and b[1] = 0, a[1] = c[1] = least element.
struct AmplifierTable {
  std::shared_ptr<const AcceptanceSet> set;
  std::size_t p = 0;
  std::vector<BigInt> c;
  std::vector<BigInt> b;
  std::vector<BigInt> a;
};

/// c[1] = least element; for i >= 2, b[i] = sum_{k<i} C(i,k) c[k],
/// a[i] = least member >= b[i], c[i] = a[i] - b[i].
AmplifierTable build_constants(std::shared_ptr<const AcceptanceSet> s, std::size_t p);

/// sum_{i=1}^{m} C(m,i) c[i]; 0 for m = 0. Throws OutOfRange unless m <= p.
BigInt amplified_count(const AmplifierTable& t, std::size_t m);

/// Accept/reject outcome of each computation path of a few-path machine.
struct FewRun {
  std::vector<bool> accepts;

  /// 'A' accepts, 'R' rejects.
  static FewRun from_string(std::string_view pattern);
  std::size_t accepting() const;
};

inline constexpr std::size_t kMaxSimulatedPaths = 20;

/// Path-level simulation: every subset of at most p distinct paths is
/// guessed, and a subset of i paths that all accept spawns c[i] accepting
/// paths. Throws TooManyPaths or OutOfRange.
BigInt simulate_amplifier(const AmplifierTable& t, const FewRun& run);

struct GrowthVerdict {
  bool pass = true;
  std::vector<std::size_t> ratio_failures;  // j with c[j] > k (j-1) C(j, ceil(j/2)) max_{i<j} c[i]
  std::vector<std::size_t> log_failures;    // j with log2(1 + c[j]) > 2 j^2
};

GrowthVerdict verify_growth(const AmplifierTable& t, const BigInt& k);

struct RcVerdict {
  bool pass = true;
  std::vector<std::size_t> violations;  // indices into the input
};

/// In-language counts must lie in s, out-of-language counts must be 0.
RcVerdict check_rc_discipline(std::span<const std::pair<bool, BigInt>> counts,
                              const AcceptanceSet& s);

}  // namespace epw
