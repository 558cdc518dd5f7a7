#include "torquot/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace torquot {

std::string_view errorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::DependentBasis: return "DependentBasis";
    case ErrorKind::NonPrimitiveSublattice: return "NonPrimitiveSublattice";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::InvalidFan: return "InvalidFan";
    case ErrorKind::InvalidQuasifan: return "InvalidQuasifan";
    case ErrorKind::ConeNotInFan: return "ConeNotInFan";
    case ErrorKind::WrongCodimension: return "WrongCodimension";
    case ErrorKind::NotStrictlyConvex: return "NotStrictlyConvex";
    case ErrorKind::AmbiguousMaximalFace: return "AmbiguousMaximalFace";
    case ErrorKind::MismatchedQuotient: return "MismatchedQuotient";
    case ErrorKind::NotEquivariant: return "NotEquivariant";
    case ErrorKind::NotAMapOfFans: return "NotAMapOfFans";
    case ErrorKind::EmptySystem: return "EmptySystem";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
  }
  return "Unknown";
}

namespace {

Integer floorDiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer truncDiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

bool divides(const Integer& d, const Integer& a) {
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

using RationalMatrix = std::vector<std::vector<Rational>>;

// In-place Gauss-Jordan elimination; returns the rank and leaves the matrix
// in reduced row echelon form.
std::size_t reduceRational(RationalMatrix& a, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t piv = r;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[r], a[piv]);
    Rational inv = 1 / a[r][c];
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

RationalMatrix toRationalMatrix(std::size_t cols, const std::vector<IntegerVector>& rows) {
  RationalMatrix a(rows.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = rows[i][j];
  return a;
}

IntegerVector clearDenominators(const RationalPoint& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntegerVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Integer(v[i].get_num() * (l / v[i].get_den()));
  return primitive(std::move(out));
}

}  // namespace

// ---------------------------------------------------------------------------
// vectors

Integer dot(const IntegerVector& a, const IntegerVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::RankMismatch, "dot product of vectors of different length");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

Rational dot(const IntegerVector& a, const RationalPoint& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::RankMismatch, "dot product of vectors of different length");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

bool isZero(const IntegerVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const IntegerVector& v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntegerVector primitive(IntegerVector v) {
  Integer g = content(v);
  if (g > 1)
    for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

IntegerVector negated(IntegerVector v) {
  for (auto& x : v) x = -x;
  return v;
}

IntegerVector add(const IntegerVector& a, const IntegerVector& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::RankMismatch, "sum of vectors of different length");
  IntegerVector s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

int compareLex(const IntegerVector& a, const IntegerVector& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

std::string toString(const IntegerVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

RationalPoint toRational(const IntegerVector& v) {
  RationalPoint p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i];
  return p;
}

// ---------------------------------------------------------------------------
// matrices

IntegerMatrix::IntegerMatrix(std::initializer_list<std::initializer_list<Integer>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::RankMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntegerMatrix IntegerMatrix::identity(std::size_t n) {
  IntegerMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::fromRows(std::size_t cols, const std::vector<IntegerVector>& rows) {
  IntegerMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(ErrorKind::RankMismatch, "row of length " + std::to_string(rows[i].size()) +
                                                                         " in a matrix with " + std::to_string(cols) + " columns");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntegerMatrix IntegerMatrix::fromColumns(std::size_t rows, const std::vector<IntegerVector>& columns) {
  return fromRows(rows, columns).transpose();
}

IntegerVector IntegerMatrix::row(std::size_t i) const {
  return IntegerVector(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                       data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

IntegerVector IntegerMatrix::column(std::size_t j) const {
  IntegerVector c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<IntegerVector> IntegerMatrix::rowVectors() const {
  std::vector<IntegerVector> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntegerMatrix IntegerMatrix::rowRange(std::size_t begin, std::size_t end) const {
  IntegerMatrix m(end - begin, cols_);
  for (std::size_t i = begin; i < end; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i - begin, j) = (*this)(i, j);
  return m;
}

IntegerVector IntegerMatrix::apply(const IntegerVector& v) const {
  if (v.size() != cols_)
    throw Error(ErrorKind::RankMismatch, "matrix with " + std::to_string(cols_) + " columns applied to vector of rank " +
                                             std::to_string(v.size()));
  IntegerVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < cols_; ++j) s += (*this)(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

std::vector<IntegerVector> IntegerMatrix::apply(const std::vector<IntegerVector>& vs) const {
  std::vector<IntegerVector> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(apply(v));
  return out;
}

void IntegerMatrix::swapRows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swapColumns(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::addRowMultiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j)
    mpz_addmul((*this)(target, j).get_mpz_t(), factor.get_mpz_t(), (*this)(source, j).get_mpz_t());
}

void IntegerMatrix::addColumnMultiple(std::size_t target, std::size_t source, const Integer& factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i)
    mpz_addmul((*this)(i, target).get_mpz_t(), factor.get_mpz_t(), (*this)(i, source).get_mpz_t());
}

void IntegerMatrix::negateRow(std::size_t i) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntegerMatrix::negateColumn(std::size_t j) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

bool IntegerMatrix::isZero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

bool IntegerMatrix::operator==(const IntegerMatrix& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

std::string IntegerMatrix::toString() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rows_; ++i) os << (i ? "," : "") << torquot::toString(row(i));
  os << ']';
  return os.str();
}

IntegerMatrix operator*(const IntegerMatrix& a, const IntegerMatrix& b) {
  if (a.cols() != b.rows())
    throw Error(ErrorKind::RankMismatch, "product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                             " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  IntegerMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntegerMatrix vstack(const IntegerMatrix& top, const IntegerMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw Error(ErrorKind::RankMismatch, "vstack of matrices with different widths");
  IntegerMatrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) m(top.rows() + i, j) = bottom(i, j);
  return m;
}

std::size_t rank(std::size_t cols, const std::vector<IntegerVector>& rows) {
  RationalMatrix a = toRationalMatrix(cols, rows);
  return reduceRational(a, cols);
}

std::size_t rank(const IntegerMatrix& m) { return rank(m.cols(), m.rowVectors()); }

Integer determinant(const IntegerMatrix& square) {
  if (square.rows() != square.cols()) throw Error(ErrorKind::RankMismatch, "determinant of a non-square matrix");
  // Bareiss fraction-free elimination.
  const std::size_t n = square.rows();
  IntegerMatrix a = square;
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      a.swapRows(piv, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * a(n - 1, n - 1));
}

bool isUnimodular(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) return false;
  Integer d = determinant(m);
  return d == 1 || d == -1;
}

// ---------------------------------------------------------------------------
// normal forms

HermiteDecomposition hermiteNormalForm(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  const std::size_t rows = a.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < rows; ++c) {
    for (;;) {
      std::size_t piv = rows;
      for (std::size_t i = r; i < rows; ++i)
        if (a(i, c) != 0 && (piv == rows || mpz_cmpabs(a(i, c).get_mpz_t(), a(piv, c).get_mpz_t()) < 0)) piv = i;
      if (piv == rows) break;
      a.swapRows(r, piv);
      u.swapRows(r, piv);
      bool cleared = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (a(i, c) == 0) continue;
        Integer q = truncDiv(a(i, c), a(r, c));
        a.addRowMultiple(i, r, -q);
        u.addRowMultiple(i, r, -q);
        if (a(i, c) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      a.negateRow(r);
      u.negateRow(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floorDiv(a(i, c), a(r, c));
      a.addRowMultiple(i, r, -q);
      u.addRowMultiple(i, r, -q);
    }
    ++r;
  }
  return {std::move(a), std::move(u)};
}

HermiteDecomposition columnHermiteForm(const IntegerMatrix& m) {
  auto rowForm = hermiteNormalForm(m.transpose());
  return {rowForm.form.transpose(), rowForm.transform.transpose()};
}

SmithDecomposition smithNormalForm(const IntegerMatrix& m) {
  IntegerMatrix a = m;
  IntegerMatrix u = IntegerMatrix::identity(m.rows());
  IntegerMatrix v = IntegerMatrix::identity(m.cols());
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool exhausted = false;
    for (;;) {
      std::size_t pi = rows, pj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi == rows || mpz_cmpabs(a(i, j).get_mpz_t(), a(pi, pj).get_mpz_t()) < 0)) {
            pi = i;
            pj = j;
          }
      if (pi == rows) {
        exhausted = true;
        break;
      }
      a.swapRows(t, pi);
      u.swapRows(t, pi);
      a.swapColumns(t, pj);
      v.swapColumns(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = truncDiv(a(i, t), a(t, t));
        a.addRowMultiple(i, t, -q);
        u.addRowMultiple(i, t, -q);
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = truncDiv(a(t, j), a(t, t));
        a.addColumnMultiple(j, t, -q);
        v.addColumnMultiple(j, t, -q);
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility chain: fold an offending row into the pivot row
      bool folded = false;
      for (std::size_t i = t + 1; i < rows && !folded; ++i)
        for (std::size_t j = t + 1; j < cols && !folded; ++j)
          if (!divides(a(t, t), a(i, j))) {
            a.addRowMultiple(t, i, 1);
            u.addRowMultiple(t, i, 1);
            folded = true;
          }
      if (!folded) break;
    }
    if (exhausted) break;
    if (a(t, t) < 0) {
      a.negateRow(t);
      u.negateRow(t);
    }
  }
  return {std::move(a), std::move(u), std::move(v)};
}

// ---------------------------------------------------------------------------
// sublattices

SublatticeBasis::SublatticeBasis(std::size_t ambientRank, const std::vector<IntegerVector>& basis)
    : ambientRank_(ambientRank) {
  IntegerMatrix m = IntegerMatrix::fromRows(ambientRank, basis);
  if (torquot::rank(m) != basis.size())
    throw Error(ErrorKind::DependentBasis, "sublattice generators are linearly dependent");
  if (basis.empty()) return;
  IntegerMatrix h = hermiteNormalForm(m).form;
  basis_ = h.rowVectors();
  SmithDecomposition snf = smithNormalForm(h);
  primitive_ = true;
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (snf.form(i, i) != 1) primitive_ = false;
}

SublatticeBasis::SublatticeBasis(std::size_t ambientRank, const std::vector<IntegerVector>& basis, Saturated)
    : ambientRank_(ambientRank) {
  if (!basis.empty()) basis_ = hermiteNormalForm(IntegerMatrix::fromRows(ambientRank, basis)).form.rowVectors();
}

SublatticeBasis SublatticeBasis::zero(std::size_t ambientRank) { return SublatticeBasis(ambientRank, {}); }

SublatticeBasis SublatticeBasis::full(std::size_t ambientRank) {
  SublatticeBasis out;
  out.ambientRank_ = ambientRank;
  out.basis_ = IntegerMatrix::identity(ambientRank).rowVectors();
  return out;
}

SublatticeBasis SublatticeBasis::saturatedSpan(std::size_t ambientRank, const std::vector<IntegerVector>& generators) {
  IntegerMatrix g = IntegerMatrix::fromRows(ambientRank, generators);
  SublatticeBasis annihilator = kernelBasis(g);
  return kernelBasis(annihilator.matrix());
}

SublatticeBasis kernelBasis(const IntegerMatrix& m) {
  const std::size_t n = m.cols();
  if (m.isZero()) return SublatticeBasis::full(n);
  HermiteDecomposition h = hermiteNormalForm(m.transpose());
  std::size_t r = 0;
  while (r < n && !isZero(h.form.row(r))) ++r;
  std::vector<IntegerVector> basis;
  for (std::size_t i = r; i < n; ++i) basis.push_back(h.transform.row(i));
  // Rows of a unimodular transform: independent and saturated.
  return SublatticeBasis(n, basis, SublatticeBasis::Saturated{});
}

SublatticeBasis saturate(const SublatticeBasis& lattice) {
  return SublatticeBasis::saturatedSpan(lattice.ambientRank(), lattice.basis());
}

IntegerMatrix quotientProjection(const SublatticeBasis& lattice) {
  if (!lattice.isPrimitive())
    throw Error(ErrorKind::NonPrimitiveSublattice, "quotient projection requires a saturated sublattice");
  const std::size_t n = lattice.ambientRank();
  const std::size_t k = lattice.rank();
  if (k == 0) return IntegerMatrix::identity(n);
  if (k == n) return IntegerMatrix(0, n);
  SmithDecomposition snf = smithNormalForm(lattice.matrix());
  IntegerMatrix p = snf.right.transpose().rowRange(k, n);
  IntegerMatrix h = hermiteNormalForm(p).form;
  ensure((h * lattice.matrix().transpose()).isZero(), "quotient projection does not annihilate the sublattice");
  return h;
}

std::optional<IntegerMatrix> rightInverse(const IntegerMatrix& p) {
  const std::size_t m = p.rows();
  const std::size_t n = p.cols();
  if (m > n) return std::nullopt;
  SmithDecomposition snf = smithNormalForm(p);
  for (std::size_t i = 0; i < m; ++i)
    if (snf.form(i, i) != 1) return std::nullopt;
  IntegerMatrix embed(n, m);
  for (std::size_t i = 0; i < m; ++i) embed(i, i) = 1;
  IntegerMatrix r = snf.right * embed * snf.left;
  ensure(p * r == IntegerMatrix::identity(m), "right inverse check failed");
  return r;
}

std::optional<IntegerMatrix> factorThrough(const IntegerMatrix& f, const IntegerMatrix& p) {
  if (f.cols() != p.cols()) throw Error(ErrorKind::RankMismatch, "factorThrough: source ranks differ");
  auto r = rightInverse(p);
  if (!r) return std::nullopt;
  IntegerMatrix x = f * *r;
  if (!(x * p == f)) return std::nullopt;
  return x;
}

SublatticeBasis preimage(const IntegerMatrix& p, const SublatticeBasis& target) {
  if (target.ambientRank() != p.rows()) throw Error(ErrorKind::RankMismatch, "preimage: target rank mismatch");
  auto r = rightInverse(p);
  ensure(r.has_value(), "preimage requires a surjective projection");
  std::vector<IntegerVector> gens = kernelBasis(p).basis();
  for (const auto& b : target.basis()) gens.push_back(r->apply(b));
  return SublatticeBasis::saturatedSpan(p.cols(), gens);
}

bool inSpan(const SublatticeBasis& lattice, const IntegerVector& v) {
  std::vector<IntegerVector> rows = lattice.basis();
  rows.push_back(v);
  return rank(lattice.ambientRank(), rows) == lattice.rank();
}

IntegerVector projectOrthogonal(const IntegerVector& v, const std::vector<IntegerVector>& rows) {
  if (rows.empty()) return primitive(v);
  const std::size_t k = rows.size();
  const std::size_t n = v.size();
  // Solve (B B^T) y = B v, augmented.
  RationalMatrix a(k, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) a[i][j] = dot(rows[i], rows[j]);
    a[i][k] = dot(rows[i], v);
  }
  ensure(reduceRational(a, k) == k, "projectOrthogonal needs independent rows");
  RationalPoint w = toRational(v);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) w[j] -= a[i][k] * Rational(rows[i][j]);
  return clearDenominators(w);
}

}  // namespace torquot
