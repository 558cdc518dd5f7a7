#include "torquot/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace torquot {

ConeSystem::ConeSystem(std::size_t ambientRank, std::vector<Cone> cones)
    : ambientRank_(ambientRank), cones_(std::move(cones)) {
  for (const auto& c : cones_)
    if (c.ambientRank() != ambientRank_)
      throw Error(ErrorKind::RankMismatch, "cone of rank " + std::to_string(c.ambientRank()) + " in a system of rank " +
                                               std::to_string(ambientRank_));
  std::sort(cones_.begin(), cones_.end());
  cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
}

ConeSystem ConeSystem::faceClosureOf(std::size_t ambientRank, const std::vector<Cone>& cones) {
  std::set<Cone> all;
  for (const auto& c : cones) {
    if (all.count(c)) continue;
    for (auto& f : faces(c)) all.insert(std::move(f));
  }
  return ConeSystem(ambientRank, {all.begin(), all.end()});
}

std::vector<Cone> ConeSystem::maximalCones() const {
  // Containment is transitive, so comparing against the maximal cones found
  // so far (in order of decreasing dimension) is enough.
  std::vector<std::size_t> order(cones_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return cones_[a].dim() > cones_[b].dim(); });
  std::vector<std::size_t> found;
  for (std::size_t i : order)
    if (std::none_of(found.begin(), found.end(), [&](std::size_t j) { return cones_[j].containsCone(cones_[i]); }))
      found.push_back(i);
  std::sort(found.begin(), found.end());
  std::vector<Cone> out;
  for (std::size_t i : found) out.push_back(cones_[i]);
  return out;
}

std::vector<Cone> ConeSystem::rays() const {
  std::vector<Cone> out;
  for (const auto& c : cones_)
    if (c.dim() == 1) out.push_back(c);
  return out;
}

std::optional<std::size_t> ConeSystem::indexOf(const Cone& c) const {
  auto it = std::lower_bound(cones_.begin(), cones_.end(), c);
  if (it == cones_.end() || !(*it == c)) return std::nullopt;
  return static_cast<std::size_t>(it - cones_.begin());
}

std::string ConeSystem::toString() const {
  std::ostringstream os;
  os << "system(rank " << ambientRank_ << ")";
  for (const auto& c : cones_) os << "\n  " << c.toString();
  return os.str();
}

std::string_view fanClassName(FanClass c) {
  switch (c) {
    case FanClass::Fan: return "Fan";
    case FanClass::Quasifan: return "Quasifan";
    case FanClass::ConeSystem: return "ConeSystem";
  }
  return "ConeSystem";
}

std::string_view violationKindName(ViolationKind k) {
  switch (k) {
    case ViolationKind::EmptySystem: return "EmptySystem";
    case ViolationKind::NotStrictlyConvex: return "NotStrictlyConvex";
    case ViolationKind::MissingFace: return "MissingFace";
    case ViolationKind::NotCommonFace: return "NotCommonFace";
  }
  return "Unknown";
}

FanValidation validateFan(const ConeSystem& system) {
  FanValidation out;
  const auto& cones = system.cones();
  if (cones.empty()) {
    out.violations.push_back({ViolationKind::EmptySystem, 0, std::nullopt});
    return out;
  }

  bool faceClosed = true;
  bool strictlyConvex = true;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    if (!cones[i].isStrictlyConvex()) {
      strictlyConvex = false;
      out.violations.push_back({ViolationKind::NotStrictlyConvex, i, std::nullopt});
    }
    // Facet-closed at every level implies face-closed.
    for (const auto& f : facets(cones[i]))
      if (!system.contains(f)) {
        faceClosed = false;
        out.violations.push_back({ViolationKind::MissingFace, i, std::nullopt});
        break;
      }
  }

  // In a face-closed system it suffices to check pairs of maximal cones: for
  // faces f of s and g of t, f ∩ g is a face of the common face s ∩ t and
  // hence of f and g.
  std::vector<std::size_t> checked;
  if (faceClosed) {
    for (const auto& m : system.maximalCones()) checked.push_back(*system.indexOf(m));
  } else {
    for (std::size_t i = 0; i < cones.size(); ++i) checked.push_back(i);
  }
  bool commonFaces = true;
  for (std::size_t a = 0; a < checked.size(); ++a)
    for (std::size_t b = a + 1; b < checked.size(); ++b) {
      const Cone& s = cones[checked[a]];
      const Cone& t = cones[checked[b]];
      Cone meet = intersect(s, t);
      if (!isFaceOf(meet, s) || !isFaceOf(meet, t)) {
        commonFaces = false;
        out.violations.push_back({ViolationKind::NotCommonFace, checked[a], checked[b]});
      }
    }

  if (faceClosed && commonFaces)
    out.classification = strictlyConvex ? FanClass::Fan : FanClass::Quasifan;
  return out;
}

MapOfFansCheck isMapOfFans(const IntegerMatrix& f, const ConeSystem& source, const ConeSystem& target) {
  if (f.cols() != source.ambientRank() || f.rows() != target.ambientRank())
    throw Error(ErrorKind::RankMismatch, "map of fans: matrix is " + std::to_string(f.rows()) + "x" +
                                             std::to_string(f.cols()) + ", source rank " +
                                             std::to_string(source.ambientRank()) + ", target rank " +
                                             std::to_string(target.ambientRank()));
  MapOfFansCheck out;
  std::vector<Cone> targets = target.maximalCones();
  for (const auto& s : source.maximalCones()) {
    std::vector<IntegerVector> images = f.apply(s.generators());
    auto hit = std::find_if(targets.begin(), targets.end(), [&](const Cone& t) {
      return std::all_of(images.begin(), images.end(), [&](const IntegerVector& v) { return t.contains(v); });
    });
    if (hit == targets.end()) {
      out.isMap = false;
      out.failingSource = s;
      return out;
    }
    out.targets.push_back(*target.indexOf(*hit));
  }
  return out;
}

ConeSystem imageOfMaximalCones(const IntegerMatrix& p, const ConeSystem& system) {
  std::vector<Cone> images;
  for (const auto& c : system.maximalCones()) images.push_back(imageCone(p, c));
  return ConeSystem::faceClosureOf(p.rows(), images);
}

FanQuotient quasifanToFan(const ConeSystem& quasifan) {
  FanValidation v = validateFan(quasifan);
  if (!v.isQuasifan()) throw Error(ErrorKind::InvalidQuasifan, "input is not a quasifan");
  std::vector<Cone> maximal = quasifan.maximalCones();
  Cone common = maximal.front();
  for (std::size_t i = 1; i < maximal.size(); ++i) common = intersect(common, maximal[i]);

  FanQuotient out;
  out.lattice = common.lineality();
  out.projection = quotientProjection(out.lattice);
  std::vector<Cone> images;
  for (const auto& c : maximal) {
    images.push_back(imageCone(out.projection, c));
    ensure(images.back().isStrictlyConvex(), "collapsed quasifan cone is not strictly convex");
  }
  out.fan = ConeSystem::faceClosureOf(out.projection.rows(), images);
  ensure(validateFan(out.fan).isFan(), "collapsed quasifan is not a fan");
  return out;
}

ConeSystem starSubfan(const ConeSystem& fan, const Cone& tau) {
  if (!fan.contains(tau)) throw Error(ErrorKind::ConeNotInFan, tau.toString() + " is not a cone of the fan");
  std::vector<Cone> star;
  for (const auto& m : fan.maximalCones())
    if (isFaceOf(tau, m)) star.push_back(m);
  return ConeSystem::faceClosureOf(fan.ambientRank(), star);
}

FanQuotient orbitClosureFan(const ConeSystem& fan, const Cone& tau) {
  ConeSystem star = starSubfan(fan, tau);
  FanQuotient out;
  out.lattice = SublatticeBasis::saturatedSpan(fan.ambientRank(), tau.generators());
  out.projection = quotientProjection(out.lattice);
  out.fan = imageOfMaximalCones(out.projection, star);
  ensure(validateFan(out.fan).isFan(), "orbit closure fan is not a fan");
  return out;
}

bool isComplete(const ConeSystem& fan) {
  if (fan.empty()) return false;
  const std::size_t n = fan.ambientRank();
  if (n == 0) return true;
  std::vector<Cone> maximal = fan.maximalCones();
  for (const auto& m : maximal)
    if (m.dim() != n) return false;
  for (const auto& m : maximal)
    for (const auto& f : facets(m)) {
      auto holders = std::count_if(maximal.begin(), maximal.end(), [&](const Cone& c) { return c.containsCone(f); });
      if (holders < 2) return false;
    }
  return true;
}

}  // namespace torquot
