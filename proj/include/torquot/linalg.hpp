#pragma once

// Exact integer lattice algebra: normal forms, kernels, saturation and
// canonical quotient projections. Everything is arbitrary precision.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "torquot/error.hpp"

namespace torquot {

using Integer = mpz_class;
using Rational = mpq_class;
using IntegerVector = std::vector<Integer>;
using RationalPoint = std::vector<Rational>;

Integer dot(const IntegerVector& a, const IntegerVector& b);
Rational dot(const IntegerVector& a, const RationalPoint& b);
bool isZero(const IntegerVector& v);
// gcd of the entries; zero for the zero vector
Integer content(const IntegerVector& v);
IntegerVector primitive(IntegerVector v);
IntegerVector negated(IntegerVector v);
IntegerVector add(const IntegerVector& a, const IntegerVector& b);
int compareLex(const IntegerVector& a, const IntegerVector& b);
std::string toString(const IntegerVector& v);
RationalPoint toRational(const IntegerVector& v);

class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> rows);

  static IntegerMatrix identity(std::size_t n);
  static IntegerMatrix fromRows(std::size_t cols, const std::vector<IntegerVector>& rows);
  static IntegerMatrix fromColumns(std::size_t rows, const std::vector<IntegerVector>& columns);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntegerVector row(std::size_t i) const;
  IntegerVector column(std::size_t j) const;
  std::vector<IntegerVector> rowVectors() const;

  IntegerMatrix transpose() const;
  IntegerMatrix rowRange(std::size_t begin, std::size_t end) const;
  IntegerVector apply(const IntegerVector& v) const;
  std::vector<IntegerVector> apply(const std::vector<IntegerVector>& vs) const;

  void swapRows(std::size_t a, std::size_t b);
  void swapColumns(std::size_t a, std::size_t b);
  // row[target] += factor * row[source]
  void addRowMultiple(std::size_t target, std::size_t source, const Integer& factor);
  void addColumnMultiple(std::size_t target, std::size_t source, const Integer& factor);
  void negateRow(std::size_t i);
  void negateColumn(std::size_t j);

  bool isZero() const;
  bool operator==(const IntegerMatrix& other) const;

  std::string toString() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix vstack(const IntegerMatrix& top, const IntegerMatrix& bottom);

// Rank over the rationals.
std::size_t rank(const IntegerMatrix& m);
std::size_t rank(std::size_t cols, const std::vector<IntegerVector>& rows);
Integer determinant(const IntegerMatrix& square);
bool isUnimodular(const IntegerMatrix& m);

// H = U * M with H in row Hermite normal form: pivots strictly positive and
// moving right row by row, entries above a pivot reduced into [0, pivot),
// zero rows at the bottom. U is unimodular.
struct HermiteDecomposition {
  IntegerMatrix form;
  IntegerMatrix transform;
};
HermiteDecomposition hermiteNormalForm(const IntegerMatrix& m);
// Column-style companion: H = M * V with H^T the row form of M^T.
HermiteDecomposition columnHermiteForm(const IntegerMatrix& m);

// S = U * M * V, S diagonal with non-negative entries d_1 | d_2 | ...
struct SmithDecomposition {
  IntegerMatrix form;
  IntegerMatrix left;
  IntegerMatrix right;
};
SmithDecomposition smithNormalForm(const IntegerMatrix& m);

// A sublattice of Z^n given by linearly independent vectors. The stored
// basis is always the row Hermite normal form of the input, so equal
// lattices have identical bases.
class SublatticeBasis {
 public:
  SublatticeBasis() = default;
  // Throws DependentBasis for linearly dependent input or RankMismatch for
  // vectors of the wrong length. Zero vectors count as dependent.
  SublatticeBasis(std::size_t ambientRank, const std::vector<IntegerVector>& basis);

  static SublatticeBasis zero(std::size_t ambientRank);
  static SublatticeBasis full(std::size_t ambientRank);
  // (span of generators) ∩ Z^n; generators may be dependent or zero.
  static SublatticeBasis saturatedSpan(std::size_t ambientRank, const std::vector<IntegerVector>& generators);

  std::size_t ambientRank() const noexcept { return ambientRank_; }
  std::size_t rank() const noexcept { return basis_.size(); }
  const std::vector<IntegerVector>& basis() const noexcept { return basis_; }
  bool isPrimitive() const noexcept { return primitive_; }
  IntegerMatrix matrix() const { return IntegerMatrix::fromRows(ambientRank_, basis_); }

  bool operator==(const SublatticeBasis& other) const {
    return ambientRank_ == other.ambientRank_ && basis_ == other.basis_;
  }

 private:
  friend SublatticeBasis kernelBasis(const IntegerMatrix& m);
  struct Saturated {};
  // Independent rows known to span a saturated lattice; only normalizes.
  SublatticeBasis(std::size_t ambientRank, const std::vector<IntegerVector>& basis, Saturated);

  std::size_t ambientRank_ = 0;
  std::vector<IntegerVector> basis_;
  bool primitive_ = true;
};

// Saturated integer kernel {v : M v = 0}, basis in Hermite normal form.
SublatticeBasis kernelBasis(const IntegerMatrix& m);
SublatticeBasis saturate(const SublatticeBasis& lattice);
// Canonical surjection Z^n -> Z^(n-k) with kernel exactly L: the row Hermite
// normal form of the trailing columns of the Smith right transform. Throws
// NonPrimitiveSublattice when L is not saturated.
IntegerMatrix quotientProjection(const SublatticeBasis& lattice);

// Integer R with P * R = I for a surjective P; nullopt if P is not surjective.
std::optional<IntegerMatrix> rightInverse(const IntegerMatrix& p);
// The unique X with F = X * P for a surjective P, or nullopt when the
// kernel of P is not contained in the kernel of F.
std::optional<IntegerMatrix> factorThrough(const IntegerMatrix& f, const IntegerMatrix& p);
// Saturated preimage P^{-1}(target) for a surjective P.
SublatticeBasis preimage(const IntegerMatrix& p, const SublatticeBasis& target);
// Whether v lies in the real span of the lattice.
bool inSpan(const SublatticeBasis& lattice, const IntegerVector& v);

// Orthogonal projection of v onto the complement of span(rows), scaled to a
// primitive integer vector. Exact.
IntegerVector projectOrthogonal(const IntegerVector& v, const std::vector<IntegerVector>& rows);

}  // namespace torquot
