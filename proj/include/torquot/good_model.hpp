#pragma once

// Good models: the universal fan with a good quotient receiving a map from
// a given fan, and the maps they induce.

#include <vector>

#include "torquot/good_quotient.hpp"

namespace torquot {

struct GoodModelResult {
  QuotientResult quotient;
  // One hull per maximal cone of the quotient fan: the cone spanned by all
  // rays of the input mapping into it.
  std::vector<Cone> hulls;
  SublatticeBasis collapsed;  // V ∩ N for the common lineality V of the hulls
  IntegerMatrix projection;   // G : N -> N / collapsed
  ConeSystem model;           // the fan of the good model
  IntegerMatrix factor;       // P̄ with P = P̄ G

  std::size_t modelRank() const { return projection.rows(); }
};

GoodModelResult goodModel(const ConeSystem& fan, const SublatticeBasis& sublattice);

// The quotient of the good model by the image of the acting sublattice.
QuotientResult modelQuotient(const GoodModelResult& model);

// The unique F̄ with F̄ G = G' F. Throws NotAMapOfFans if F is not a map of
// fans (or F̄ fails to be one), NotEquivariant if F(L) is not inside L'.
IntegerMatrix inducedGoodModelMap(const IntegerMatrix& f, const GoodModelResult& source,
                                  const GoodModelResult& target);

}  // namespace torquot
