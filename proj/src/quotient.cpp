#include "torquot/quotient.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <sstream>

namespace torquot {

namespace {

void checkSublattice(const ConeSystem& system, const SublatticeBasis& sublattice) {
  if (sublattice.ambientRank() != system.ambientRank())
    throw Error(ErrorKind::RankMismatch, "sublattice of rank " + std::to_string(sublattice.ambientRank()) +
                                             " for a system of rank " + std::to_string(system.ambientRank()));
  if (!sublattice.isPrimitive()) throw Error(ErrorKind::NonPrimitiveSublattice, "the acting sublattice must be saturated");
  if (system.empty()) throw Error(ErrorKind::EmptySystem, "cannot take the quotient of an empty system");
}

std::vector<Cone> inclusionMaximal(std::vector<Cone> cones) {
  std::sort(cones.begin(), cones.end());
  cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
  std::vector<Cone> out;
  for (std::size_t i = 0; i < cones.size(); ++i) {
    bool maximal = true;
    for (std::size_t j = 0; j < cones.size() && maximal; ++j)
      if (i != j && cones[j].containsCone(cones[i])) maximal = false;
    if (maximal) out.push_back(cones[i]);
  }
  return out;
}

std::size_t incidences(const std::vector<Cone>& cones, const std::vector<IntegerVector>& points) {
  std::size_t total = 0;
  for (const auto& c : cones)
    total += static_cast<std::size_t>(
        std::count_if(points.begin(), points.end(), [&](const IntegerVector& p) { return c.contains(p); }));
  return total;
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

bool QuotientTrace::measuresMonotone() const {
  std::size_t count = initialConeCount;
  std::size_t incidence = initialIncidenceCount;
  for (const auto& s : steps) {
    if (s.coneCount > count) return false;
    if (s.coneCount == count && s.incidenceCount <= incidence) return false;
    count = s.coneCount;
    incidence = s.incidenceCount;
  }
  return true;
}

std::vector<std::string> QuotientTrace::lines() const {
  std::vector<std::string> out;
  out.push_back("init cones=" + std::to_string(initialConeCount) + " incidences=" + std::to_string(initialIncidenceCount));
  for (const auto& s : steps) {
    std::ostringstream os;
    os << "step " << s.iteration << " tau1=" << s.first << " tau2=" << s.second
       << " replaced=" << (s.replaced == LoopStep::Replaced::First ? "tau1" : "tau2") << " face=" << s.face.toString()
       << " new=" << s.replacement.toString() << " cones=" << s.coneCount << " incidences=" << s.incidenceCount;
    out.push_back(os.str());
  }
  return out;
}

QuasifanResult quotientQuasifan(const ConeSystem& system, const SublatticeBasis& sublattice) {
  checkSublattice(system, sublattice);
  QuasifanResult out;
  out.projection = quotientProjection(sublattice);
  const IntegerMatrix& p1 = out.projection;
  const std::size_t rank1 = p1.rows();
  const std::vector<Cone> maximal = system.maximalCones();

  // Projected minimal generators: extreme rays and ± lineality vectors.
  std::vector<IntegerVector> points;
  for (const auto& c : maximal)
    for (const auto& g : c.generators()) points.push_back(p1.apply(g));
  std::sort(points.begin(), points.end(), [](const auto& a, const auto& b) { return compareLex(a, b) < 0; });
  points.erase(std::unique(points.begin(), points.end()), points.end());

  std::vector<Cone> images;
  for (const auto& c : maximal) images.push_back(imageCone(p1, c));
  std::vector<Cone> working = inclusionMaximal(std::move(images));

  out.trace.initialConeCount = working.size();
  out.trace.initialIncidenceCount = incidences(working, points);

  for (std::size_t iteration = 1;; ++iteration) {
    auto violating = [&]() -> std::optional<std::pair<std::size_t, std::size_t>> {
      for (std::size_t a = 0; a < working.size(); ++a)
        for (std::size_t b = 0; b < working.size(); ++b)
          if (a != b && !isFaceOf(intersect(working[a], working[b]), working[a])) return std::pair{a, b};
      return std::nullopt;
    }();
    if (!violating) break;
    const auto [i, j] = *violating;
    const Cone meet = intersect(working[i], working[j]);

    LoopStep step;
    step.iteration = iteration;
    step.first = i;
    step.second = j;
    std::size_t replacedIndex;
    Cone faceOfSecond = minimalFaceContaining(working[j], meet);
    if (!working[i].containsCone(faceOfSecond)) {
      step.face = faceOfSecond;
      step.replaced = LoopStep::Replaced::First;
      step.replacement = convexHullUnion(working[i], faceOfSecond);
      replacedIndex = i;
    } else {
      step.face = minimalFaceContaining(working[i], meet);
      step.replaced = LoopStep::Replaced::Second;
      step.replacement = convexHullUnion(working[j], step.face);
      replacedIndex = j;
    }
    ensure(!(step.replacement == working[replacedIndex]), "merge step did not enlarge a cone");

    std::vector<Cone> next;
    for (std::size_t k = 0; k < working.size(); ++k) {
      if (k == replacedIndex) continue;
      if (step.replacement.containsCone(working[k]) && !(working[k] == step.replacement)) continue;
      next.push_back(working[k]);
    }
    next.push_back(step.replacement);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    working = std::move(next);

    step.coneCount = working.size();
    step.incidenceCount = incidences(working, points);
    out.trace.steps.push_back(std::move(step));
  }

  out.quasifan = ConeSystem::faceClosureOf(rank1, working);
  return out;
}

QuotientResult quotientFan(const ConeSystem& system, const SublatticeBasis& sublattice) {
  QuasifanResult qq = quotientQuasifan(system, sublattice);
  FanQuotient collapse = quasifanToFan(qq.quasifan);

  QuotientResult out;
  out.source = system;
  out.sublattice = sublattice;
  out.intermediateProjection = qq.projection;
  out.intermediateQuasifan = qq.quasifan;
  out.trace = std::move(qq.trace);
  out.enlargedKernel = preimage(qq.projection, collapse.lattice);
  out.projection = quotientProjection(out.enlargedKernel);

  // Re-express the collapsed fan in the canonical coordinates of N / L̂.
  IntegerMatrix composite = collapse.projection * qq.projection;
  auto change = factorThrough(out.projection, composite);
  ensure(change.has_value() && isUnimodular(*change), "canonical projection does not match the composite projection");
  out.quotientFan = imageOfMaximalCones(*change, collapse.fan);

  ensure((out.projection * sublattice.matrix().transpose()).isZero(), "projection does not kill the sublattice");
  ensure((out.projection * out.enlargedKernel.matrix().transpose()).isZero(), "projection does not kill the enlarged kernel");
  ensure(validateFan(out.quotientFan).isFan(), "quotient fan is not a fan");
  ensure(isMapOfFans(out.projection, system, out.quotientFan).isMap, "projection is not a map onto the quotient fan");
  return out;
}

QuotientResult codim2QuotientOracle(const ConeSystem& fan, const SublatticeBasis& sublattice) {
  checkSublattice(fan, sublattice);
  if (fan.ambientRank() - sublattice.rank() != 2)
    throw Error(ErrorKind::WrongCodimension, "the codimension-2 construction needs rank(N/L) = 2, got " +
                                                 std::to_string(fan.ambientRank() - sublattice.rank()));
  if (!validateFan(fan).isFan()) throw Error(ErrorKind::InvalidFan, "the codimension-2 construction needs a fan");

  const std::size_t n = fan.ambientRank();
  IntegerMatrix p = quotientProjection(sublattice);
  const auto& cones = fan.cones();
  std::vector<Cone> images;
  for (const auto& c : cones) images.push_back(imageCone(p, c));

  DisjointSets classes(cones.size());
  for (std::size_t a = 0; a < cones.size(); ++a)
    for (std::size_t b = a + 1; b < cones.size(); ++b)
      if (classes.find(a) != classes.find(b) && relativeInteriorsMeet(images[a], images[b])) classes.unite(a, b);

  std::vector<std::vector<Cone>> grouped(cones.size());
  for (const auto& m : fan.maximalCones()) grouped[classes.find(*fan.indexOf(m))].push_back(m);
  std::vector<Cone> hulls;
  for (const auto& g : grouped)
    if (!g.empty()) hulls.push_back(convexHull(n, g));

  std::vector<IntegerVector> linealities;
  for (const auto& h : hulls) {
    Cone image = imageCone(p, h);
    for (const auto& b : image.lineality().basis()) linealities.push_back(b);
  }
  SublatticeBasis v = SublatticeBasis::saturatedSpan(2, linealities);

  QuotientResult out;
  out.source = fan;
  out.sublattice = sublattice;
  out.enlargedKernel = preimage(p, v);
  out.projection = quotientProjection(out.enlargedKernel);
  out.intermediateProjection = p;
  std::vector<Cone> projectedHulls, finalCones;
  for (const auto& h : hulls) {
    projectedHulls.push_back(imageCone(p, h));
    finalCones.push_back(imageCone(out.projection, h));
  }
  out.intermediateQuasifan = ConeSystem::faceClosureOf(2, projectedHulls);
  out.quotientFan = ConeSystem::faceClosureOf(out.projection.rows(), finalCones);
  return out;
}

}  // namespace torquot
