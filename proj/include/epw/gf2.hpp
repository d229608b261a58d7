#pragma once

#include "epw/bigint.hpp"

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace epw {

/// Fixed-length bit vector over GF(2). Bit i stands for variable x_{i+1}.
class GF2Vector {
 public:
  GF2Vector() = default;
  explicit GF2Vector(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  /// Parses a string of '0'/'1'; the leftmost character is bit 0 (x1).
  static GF2Vector from_string(std::string_view bits);
  /// Low n bits of `value`, bit i of value becoming bit i of the vector.
  static GF2Vector from_index(std::uint64_t value, std::size_t n);

  std::size_t size() const { return size_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v = true) {
    const std::uint64_t m = std::uint64_t{1} << (i & 63);
    if (v) {
      words_[i >> 6] |= m;
    } else {
      words_[i >> 6] &= ~m;
    }
  }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  bool is_zero() const;
  std::size_t weight() const;
  /// Index of the lowest set bit, or size() if the vector is zero.
  std::size_t lowest_set() const;
  /// Packs the vector into an integer (requires size() <= 64).
  std::uint64_t to_index() const;
  std::string to_string() const;

  GF2Vector& operator^=(const GF2Vector& o);
  friend GF2Vector operator^(GF2Vector a, const GF2Vector& b) { return a ^= b; }

  friend bool operator==(const GF2Vector&, const GF2Vector&) = default;
  friend auto operator<=>(const GF2Vector& a, const GF2Vector& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Basis of a linear subspace of GF(2)^n in reduced row-echelon form.
///
/// The pivot of a row is its lowest set bit. Rows are sorted by strictly
/// increasing pivot and every pivot column is zero in all other rows, so two
/// bases of the same subspace compare equal.
class GF2Basis {
 public:
  explicit GF2Basis(std::size_t ambient_dim = 0) : ambient_(ambient_dim) {}

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  const std::vector<GF2Vector>& rows() const { return rows_; }

  /// Reduces v against the basis; the result is zero iff v is in the span.
  GF2Vector reduce(GF2Vector v) const;

  /// Adds v to the spanning set, keeping the basis reduced. Returns true if
  /// the dimension grew.
  bool insert(GF2Vector v);

  /// Every element of the span, 2^dim of them (requires dim() < 63).
  std::vector<GF2Vector> span() const;

  friend bool operator==(const GF2Basis&, const GF2Basis&) = default;

 private:
  std::size_t ambient_;
  std::vector<GF2Vector> rows_;
};

/// Canonical reduced echelon basis of span(vectors). `n` is used when the
/// list is empty; otherwise all vectors must have length n.
GF2Basis echelon_basis(std::span<const GF2Vector> vectors, std::size_t n);

/// True iff v lies in span(b).
bool member(const GF2Basis& b, const GF2Vector& v);

/// Either the empty set or a coset r + span(B).
class AffineSet {
 public:
  AffineSet() = default;
  AffineSet(GF2Vector representative, GF2Basis basis);

  static AffineSet empty_set() { return AffineSet{}; }

  bool empty() const { return !nonempty_; }
  const GF2Vector& representative() const { return rep_; }
  const GF2Basis& basis() const { return basis_; }

  bool contains(const GF2Vector& v) const;
  /// All members, sorted.
  std::vector<GF2Vector> elements() const;

  /// Set equality: same basis and representatives in the same coset.
  friend bool operator==(const AffineSet& a, const AffineSet& b);

 private:
  bool nonempty_ = false;
  GF2Vector rep_;
  GF2Basis basis_;
};

/// Builds the affine set spanned by `points` and checks that the points are
/// exactly that coset. Duplicates are ignored. Throws NotACoset otherwise.
AffineSet affine_from_points(std::span<const GF2Vector> points);

/// 0 for the empty set, otherwise 2^dim.
BigInt coset_cardinality(const AffineSet& a);

}  // namespace epw
