#include "torquot/good_quotient.hpp"

#include <algorithm>

namespace torquot {

std::string_view goodnessFailureName(GoodnessFailure f) {
  switch (f) {
    case GoodnessFailure::None: return "None";
    case GoodnessFailure::NoSurjectiveMaximalCone: return "NoSurjectiveMaximalCone";
    case GoodnessFailure::StrayRay: return "StrayRay";
  }
  return "Unknown";
}

AffineQuotient affineQuotient(const Cone& sigma, const SublatticeBasis& sublattice) {
  if (sublattice.ambientRank() != sigma.ambientRank())
    throw Error(ErrorKind::RankMismatch, "sublattice and cone live in different lattices");
  if (!sigma.isStrictlyConvex()) throw Error(ErrorKind::NotStrictlyConvex, sigma.toString());
  if (!sublattice.isPrimitive()) throw Error(ErrorKind::NonPrimitiveSublattice, "the acting sublattice must be saturated");

  const Cone span = Cone::linearSpan(sublattice);
  std::vector<Cone> meeting;
  for (const auto& f : faces(sigma))
    if (relativeInteriorsMeet(f, span)) meeting.push_back(f);

  std::vector<Cone> maximal;
  for (const auto& f : meeting)
    if (std::none_of(meeting.begin(), meeting.end(),
                     [&](const Cone& g) { return !(g == f) && g.containsCone(f); }))
      maximal.push_back(f);
  // The zero face always qualifies, so `maximal` is never empty.
  if (maximal.size() != 1)
    throw Error(ErrorKind::AmbiguousMaximalFace,
                std::to_string(maximal.size()) + " maximal faces of " + sigma.toString() + " meet the sublattice");

  AffineQuotient out;
  out.face = maximal.front();
  std::vector<IntegerVector> gens = sublattice.basis();
  for (const auto& r : out.face.rays()) gens.push_back(r);
  out.enlargedKernel = SublatticeBasis::saturatedSpan(sigma.ambientRank(), gens);
  out.projection = quotientProjection(out.enlargedKernel);
  out.image = imageCone(out.projection, sigma);
  ensure(out.image.isStrictlyConvex(), "affine quotient cone is not strictly convex");
  return out;
}

GoodnessReport checkGoodQuotient(const ConeSystem& fan, const QuotientResult& q) {
  if (!(fan == q.source)) throw Error(ErrorKind::MismatchedQuotient, "quotient was computed from a different system");

  const std::vector<Cone> maximal = fan.maximalCones();
  std::vector<Cone> images;
  for (const auto& s : maximal) images.push_back(imageCone(q.projection, s));
  const std::vector<Cone> rays = fan.rays();
  std::vector<Cone> rayImages;
  for (const auto& r : rays) rayImages.push_back(imageCone(q.projection, r));

  GoodnessReport report;
  for (const auto& tau : q.quotientFan.maximalCones()) {
    MaximalConeReport entry;
    entry.target = tau;
    entry.targetDim = tau.dim();

    std::vector<std::size_t> surjective;
    for (std::size_t k = 0; k < maximal.size(); ++k)
      if (images[k] == tau) surjective.push_back(k);

    if (surjective.empty()) {
      entry.failure = GoodnessFailure::NoSurjectiveMaximalCone;
    } else {
      std::optional<Cone> firstStray;
      for (std::size_t k : surjective) {
        std::optional<Cone> stray;
        for (std::size_t r = 0; r < rays.size() && !stray; ++r)
          if (tau.containsCone(rayImages[r]) && !maximal[k].containsCone(rays[r])) stray = rays[r];
        if (!stray) {
          entry.source = maximal[k];
          entry.sourceDim = maximal[k].dim();
          break;
        }
        if (!firstStray) firstStray = stray;
      }
      if (!entry.source) {
        entry.failure = GoodnessFailure::StrayRay;
        entry.strayRay = firstStray;
      }
    }

    if (entry.failure != GoodnessFailure::None) {
      report.isGood = false;
      report.isGeometric = false;
    } else if (*entry.sourceDim != entry.targetDim) {
      report.isGeometric = false;
    }
    report.perMaximalCone.push_back(std::move(entry));
  }
  return report;
}

}  // namespace torquot
