#pragma once

// Affine toric quotients and the fan criterion for good and geometric
// quotients.

#include <optional>
#include <vector>

#include "torquot/quotient.hpp"

namespace torquot {

struct AffineQuotient {
  Cone face;  // the maximal face whose relative interior meets L_R
  SublatticeBasis enlargedKernel;
  IntegerMatrix projection;
  Cone image;  // strictly convex
};

// Throws NotStrictlyConvex, NonPrimitiveSublattice, or AmbiguousMaximalFace
// if two inclusion-maximal faces meet L_R in their relative interiors.
AffineQuotient affineQuotient(const Cone& sigma, const SublatticeBasis& sublattice);

enum class GoodnessFailure { None, NoSurjectiveMaximalCone, StrayRay };
std::string_view goodnessFailureName(GoodnessFailure f);

struct MaximalConeReport {
  Cone target;
  std::optional<Cone> source;  // the matched maximal cone of the input fan
  GoodnessFailure failure = GoodnessFailure::None;
  std::optional<Cone> strayRay;
  std::size_t targetDim = 0;
  std::optional<std::size_t> sourceDim;
};

struct GoodnessReport {
  bool isGood = true;
  bool isGeometric = true;
  std::vector<MaximalConeReport> perMaximalCone;
};

// Checks, for every maximal cone of the quotient fan, that some maximal cone
// of the fan maps onto it and contains every ray mapping into it. Throws
// MismatchedQuotient if q was computed from a different system.
GoodnessReport checkGoodQuotient(const ConeSystem& fan, const QuotientResult& q);

}  // namespace torquot
