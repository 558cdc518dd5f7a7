#include "torquot/good_model.hpp"

#include <algorithm>

namespace torquot {

GoodModelResult goodModel(const ConeSystem& fan, const SublatticeBasis& sublattice) {
  FanValidation v = validateFan(fan);
  if (fan.empty()) throw Error(ErrorKind::EmptySystem, "the good model of an empty fan is undefined");
  if (!v.isFan()) throw Error(ErrorKind::InvalidFan, "good models are defined for fans");

  GoodModelResult out;
  out.quotient = quotientFan(fan, sublattice);
  const std::size_t n = fan.ambientRank();
  const IntegerMatrix& p = out.quotient.projection;

  const std::vector<Cone> rays = fan.rays();
  std::vector<Cone> rayImages;
  for (const auto& r : rays) rayImages.push_back(imageCone(p, r));

  for (const auto& tau : out.quotient.quotientFan.maximalCones()) {
    std::vector<Cone> inside;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (tau.containsCone(rayImages[k])) inside.push_back(rays[k]);
    out.hulls.push_back(convexHull(n, inside));
  }

  ConeSystem hullSystem = ConeSystem::faceClosureOf(n, out.hulls);
  ensure(validateFan(hullSystem).isQuasifan(), "ray hulls do not form a quasifan");

  Cone common = out.hulls.front();
  for (std::size_t i = 1; i < out.hulls.size(); ++i) common = intersect(common, out.hulls[i]);
  out.collapsed = common.lineality();
  out.projection = quotientProjection(out.collapsed);

  std::vector<Cone> images;
  for (const auto& h : out.hulls) images.push_back(imageCone(out.projection, h));
  out.model = ConeSystem::faceClosureOf(out.modelRank(), images);
  ensure(validateFan(out.model).isFan(), "good model is not a fan");

  auto factor = factorThrough(p, out.projection);
  ensure(factor.has_value(), "quotient projection does not factor through the good model");
  out.factor = *factor;
  ensure(isMapOfFans(out.projection, fan, out.model).isMap, "G is not a map of fans");
  ensure(isMapOfFans(out.factor, out.model, out.quotient.quotientFan).isMap, "P̄ is not a map of fans");
  return out;
}

QuotientResult modelQuotient(const GoodModelResult& model) {
  std::vector<IntegerVector> image = model.projection.apply(model.quotient.sublattice.basis());
  SublatticeBasis acting = SublatticeBasis::saturatedSpan(model.modelRank(), image);
  return quotientFan(model.model, acting);
}

IntegerMatrix inducedGoodModelMap(const IntegerMatrix& f, const GoodModelResult& source,
                                  const GoodModelResult& target) {
  const ConeSystem& from = source.quotient.source;
  const ConeSystem& to = target.quotient.source;
  if (f.cols() != from.ambientRank() || f.rows() != to.ambientRank())
    throw Error(ErrorKind::RankMismatch, "induced map: matrix shape does not match the fans");
  if (!isMapOfFans(f, from, to).isMap) throw Error(ErrorKind::NotAMapOfFans, "F is not a map of the input fans");
  for (const auto& l : source.quotient.sublattice.basis())
    if (!inSpan(target.quotient.sublattice, f.apply(l)))
      throw Error(ErrorKind::NotEquivariant, "F maps " + toString(l) + " outside the target sublattice");

  auto induced = factorThrough(target.projection * f, source.projection);
  if (!induced) throw Error(ErrorKind::NotAMapOfFans, "G' F does not factor through G");
  if (!isMapOfFans(*induced, source.model, target.model).isMap)
    throw Error(ErrorKind::NotAMapOfFans, "the induced map is not a map of good models");
  return *induced;
}

}  // namespace torquot
