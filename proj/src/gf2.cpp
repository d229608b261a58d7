#include "epw/gf2.hpp"

#include "epw/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace epw {

GF2Vector GF2Vector::from_string(std::string_view bits) {
  GF2Vector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw Error("bit string may only contain '0' and '1': " + std::string(bits));
    }
  }
  return v;
}

GF2Vector GF2Vector::from_index(std::uint64_t value, std::size_t n) {
  GF2Vector v(n);
  if (n > 0) {
    v.words_[0] = n >= 64 ? value : value & ((std::uint64_t{1} << n) - 1);
  }
  return v;
}

bool GF2Vector::is_zero() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::size_t GF2Vector::weight() const {
  std::size_t w = 0;
  for (auto x : words_) w += static_cast<std::size_t>(std::popcount(x));
  return w;
}

std::size_t GF2Vector::lowest_set() const {
  for (std::size_t k = 0; k < words_.size(); ++k) {
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  }
  return size_;
}

std::uint64_t GF2Vector::to_index() const {
  if (size_ > 64) throw LengthMismatch("vector too long to pack into 64 bits");
  return words_.empty() ? 0 : words_[0];
}

std::string GF2Vector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if (get(i)) s[i] = '1';
  }
  return s;
}

GF2Vector& GF2Vector::operator^=(const GF2Vector& o) {
  if (o.size_ != size_) throw LengthMismatch("xor of vectors of different lengths");
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= o.words_[k];
  return *this;
}

GF2Vector GF2Basis::reduce(GF2Vector v) const {
  if (v.size() != ambient_) {
    throw LengthMismatch("vector of length " + std::to_string(v.size()) +
                         " against basis of ambient dimension " + std::to_string(ambient_));
  }
  for (const auto& row : rows_) {
    if (v.get(row.lowest_set())) v ^= row;
  }
  return v;
}

bool GF2Basis::insert(GF2Vector v) {
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  const std::size_t pivot = v.lowest_set();
  // Clear the new pivot column from existing rows.
  for (auto& row : rows_) {
    if (row.get(pivot)) row ^= v;
  }
  auto pos = std::lower_bound(rows_.begin(), rows_.end(), pivot,
                              [](const GF2Vector& r, std::size_t p) { return r.lowest_set() < p; });
  rows_.insert(pos, std::move(v));
  return true;
}

std::vector<GF2Vector> GF2Basis::span() const {
  if (dim() >= 63) throw TooManyVariables("span too large to enumerate");
  std::vector<GF2Vector> out;
  out.reserve(std::size_t{1} << dim());
  out.emplace_back(ambient_);
  for (const auto& row : rows_) {
    const std::size_t half = out.size();
    for (std::size_t k = 0; k < half; ++k) out.push_back(out[k] ^ row);
  }
  return out;
}

GF2Basis echelon_basis(std::span<const GF2Vector> vectors, std::size_t n) {
  if (!vectors.empty()) n = vectors.front().size();
  GF2Basis basis(n);
  for (const auto& v : vectors) {
    if (v.size() != n) throw MixedLengths("vectors of lengths " + std::to_string(n) + " and " +
                                          std::to_string(v.size()));
    basis.insert(v);
  }
  return basis;
}

bool member(const GF2Basis& b, const GF2Vector& v) { return b.reduce(v).is_zero(); }

AffineSet::AffineSet(GF2Vector representative, GF2Basis basis)
    : nonempty_(true), rep_(std::move(representative)), basis_(std::move(basis)) {
  if (rep_.size() != basis_.ambient_dim()) {
    throw LengthMismatch("representative length differs from basis ambient dimension");
  }
}

bool AffineSet::contains(const GF2Vector& v) const {
  if (!nonempty_) return false;
  return member(basis_, v ^ rep_);
}

std::vector<GF2Vector> AffineSet::elements() const {
  if (!nonempty_) return {};
  auto pts = basis_.span();
  for (auto& p : pts) p ^= rep_;
  std::sort(pts.begin(), pts.end());
  return pts;
}

bool operator==(const AffineSet& a, const AffineSet& b) {
  if (a.empty() || b.empty()) return a.empty() == b.empty();
  return a.basis_ == b.basis_ && a.rep_.size() == b.rep_.size() && a.contains(b.rep_);
}

AffineSet affine_from_points(std::span<const GF2Vector> points) {
  if (points.empty()) return AffineSet::empty_set();
  const GF2Vector& first = points.front();
  std::set<GF2Vector> distinct;
  std::vector<GF2Vector> diffs;
  diffs.reserve(points.size());
  for (const auto& p : points) {
    if (p.size() != first.size()) throw MixedLengths("points of different lengths");
    distinct.insert(p);
    diffs.push_back(p ^ first);
  }
  GF2Basis basis = echelon_basis(diffs, first.size());
  const bool size_ok =
      basis.dim() < 63 && distinct.size() == (std::size_t{1} << basis.dim());
  if (!size_ok) {
    throw NotACoset(std::to_string(distinct.size()) + " points span an affine set of dimension " +
                    std::to_string(basis.dim()));
  }
  AffineSet result(first, std::move(basis));
  for (const auto& p : distinct) {
    if (!result.contains(p)) throw NotACoset("point " + p.to_string() + " outside generated coset");
  }
  return result;
}

BigInt coset_cardinality(const AffineSet& a) {
  if (a.empty()) return 0;
  return pow2(static_cast<unsigned>(a.basis().dim()));
}

}  // namespace epw
