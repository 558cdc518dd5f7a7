#pragma once

// Rational polyhedral cones in N_R = Z^n ⊗ R with a canonical double
// description.

#include <cstddef>
#include <string>
#include <vector>

#include "torquot/linalg.hpp"

namespace torquot {

// A cone stored as
//   cone(rays) + span(lineality) = {x : <u,x> >= 0 for u in halfspaces, <e,x> = 0 for e in equations}.
// Canonical form: rays are primitive, orthogonal to the lineality space and
// sorted lexicographically; halfspaces are primitive facet normals lying in
// the linear span of the cone, sorted; lineality and equations are saturated
// lattice bases in Hermite normal form. Two cones are equal iff they are the
// same set.
class Cone {
 public:
  Cone() = default;

  static Cone fromGenerators(std::size_t ambientRank, const std::vector<IntegerVector>& generators);
  static Cone fromInequalities(std::size_t ambientRank, const std::vector<IntegerVector>& inequalities,
                               const std::vector<IntegerVector>& equations = {});
  static Cone zero(std::size_t ambientRank) { return fromGenerators(ambientRank, {}); }
  static Cone linearSpan(const SublatticeBasis& lattice);

  std::size_t ambientRank() const noexcept { return ambientRank_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntegerVector>& rays() const noexcept { return rays_; }
  const SublatticeBasis& lineality() const noexcept { return lineality_; }
  const std::vector<IntegerVector>& halfspaces() const noexcept { return halfspaces_; }
  const std::vector<IntegerVector>& equations() const noexcept { return equations_; }
  bool isStrictlyConvex() const noexcept { return lineality_.rank() == 0; }
  bool isLinear() const noexcept { return rays_.empty(); }

  // Rays followed by ± each lineality basis vector; a generating set as a cone.
  std::vector<IntegerVector> generators() const;

  bool contains(const IntegerVector& v) const;
  bool contains(const RationalPoint& v) const;
  bool containsCone(const Cone& other) const;
  bool inRelativeInterior(const IntegerVector& v) const;
  bool inRelativeInterior(const RationalPoint& v) const;
  // Sum of the rays; lies in the relative interior.
  IntegerVector interiorVector() const;

  std::string toString() const;

  friend int compare(const Cone& a, const Cone& b);
  friend bool operator==(const Cone& a, const Cone& b) { return compare(a, b) == 0; }
  friend bool operator<(const Cone& a, const Cone& b) { return compare(a, b) < 0; }

 private:
  std::size_t ambientRank_ = 0;
  std::size_t dim_ = 0;
  std::vector<IntegerVector> rays_;
  SublatticeBasis lineality_;
  std::vector<IntegerVector> halfspaces_;
  std::vector<IntegerVector> equations_;
};

inline Cone coneFromGenerators(std::size_t rank, const std::vector<IntegerVector>& generators) {
  return Cone::fromGenerators(rank, generators);
}

bool contains(const Cone& c, const RationalPoint& v);
bool containsCone(const Cone& c, const Cone& d);
Cone intersect(const Cone& a, const Cone& b);
Cone convexHullUnion(const Cone& a, const Cone& b);
Cone convexHull(std::size_t ambientRank, const std::vector<Cone>& cones);

// All faces, sorted and deduplicated. The smallest is the lineality space.
std::vector<Cone> faces(const Cone& c);
std::vector<Cone> facets(const Cone& c);
bool isFaceOf(const Cone& face, const Cone& c);
// Intersection of the facets of c whose hyperplanes contain s. Throws
// NotContained if s is not a subset of c.
Cone minimalFaceContaining(const Cone& c, const Cone& s);

SublatticeBasis linealitySpace(const Cone& c);
inline bool isStrictlyConvex(const Cone& c) { return c.isStrictlyConvex(); }
RationalPoint relativeInteriorPoint(const Cone& c);
// relint(a) ∩ relint(b) ≠ ∅
bool relativeInteriorsMeet(const Cone& a, const Cone& b);

Cone imageCone(const IntegerMatrix& p, const Cone& c);

}  // namespace torquot
