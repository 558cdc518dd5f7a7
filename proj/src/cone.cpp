#include "torquot/cone.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <utility>

namespace torquot {

namespace {

struct DoubleDescription {
  std::vector<IntegerVector> lineality;
  std::vector<IntegerVector> rays;
};

struct TrackedRay {
  IntegerVector v;
  std::vector<bool> tight;
};

// Incremental double description of {x : <a,x> >= 0 (a in inequalities),
// <e,x> = 0 (e in equations)}. Returns a lineality basis and the extreme rays
// modulo lineality. Adjacency uses the combinatorial test on tight sets.
DoubleDescription doubleDescription(std::size_t n, const std::vector<IntegerVector>& inequalities,
                                    const std::vector<IntegerVector>& equations) {
  const std::size_t m = inequalities.size();
  std::vector<IntegerVector> lin = kernelBasis(IntegerMatrix::fromRows(n, equations)).basis();
  std::vector<TrackedRay> rays;

  for (std::size_t k = 0; k < m; ++k) {
    const IntegerVector& a = inequalities[k];
    if (a.size() != n) throw Error(ErrorKind::RankMismatch, "inequality of wrong rank");

    auto pivot = std::find_if(lin.begin(), lin.end(), [&](const IntegerVector& l) { return dot(a, l) != 0; });
    if (pivot != lin.end()) {
      IntegerVector l0 = *pivot;
      lin.erase(pivot);
      Integer s0 = dot(a, l0);
      if (s0 < 0) {
        l0 = negated(std::move(l0));
        s0 = -s0;
      }
      auto shift = [&](IntegerVector& v) {
        Integer s = dot(a, v);
        if (s == 0) return;
        for (std::size_t i = 0; i < n; ++i) v[i] = s0 * v[i] - s * l0[i];
        v = primitive(std::move(v));
      };
      for (auto& l : lin) shift(l);
      for (auto& r : rays) {
        shift(r.v);
        r.tight[k] = true;
      }
      TrackedRay fresh{l0, std::vector<bool>(m, false)};
      for (std::size_t j = 0; j < k; ++j) fresh.tight[j] = true;
      rays.push_back(std::move(fresh));
      continue;
    }

    std::vector<Integer> s(rays.size());
    std::vector<std::size_t> pos, neg;
    std::vector<TrackedRay> next;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      s[i] = dot(a, rays[i].v);
      if (s[i] > 0) pos.push_back(i);
      if (s[i] < 0) neg.push_back(i);
      if (s[i] >= 0) {
        next.push_back(rays[i]);
        if (s[i] == 0) next.back().tight[k] = true;
      }
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        std::vector<bool> common(m, false);
        for (std::size_t j = 0; j < k; ++j) common[j] = rays[p].tight[j] && rays[q].tight[j];
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r == p || r == q) continue;
          bool covers = true;
          for (std::size_t j = 0; j < k && covers; ++j)
            if (common[j] && !rays[r].tight[j]) covers = false;
          if (covers) adjacent = false;
        }
        if (!adjacent) continue;
        IntegerVector v(n);
        for (std::size_t i = 0; i < n; ++i) v[i] = s[p] * rays[q].v[i] - s[q] * rays[p].v[i];
        common[k] = true;
        next.push_back({primitive(std::move(v)), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  DoubleDescription out;
  out.lineality = std::move(lin);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

void sortUnique(std::vector<IntegerVector>& vs) {
  std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) { return compareLex(a, b) < 0; });
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

int compareSequences(const std::vector<IntegerVector>& a, const std::vector<IntegerVector>& b) {
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i)
    if (int c = compareLex(a[i], b[i])) return c;
  if (a.size() == b.size()) return 0;
  return a.size() < b.size() ? -1 : 1;
}

void checkRank(const Cone& a, const Cone& b, const char* op) {
  if (a.ambientRank() != b.ambientRank())
    throw Error(ErrorKind::RankMismatch, std::string(op) + ": cones of rank " + std::to_string(a.ambientRank()) +
                                             " and " + std::to_string(b.ambientRank()));
}

// The face of c cut out by every facet normal vanishing on all of `gens`.
Cone faceCutOut(const Cone& c, const std::vector<IntegerVector>& gens) {
  std::vector<IntegerVector> tight;
  for (const auto& h : c.halfspaces())
    if (std::all_of(gens.begin(), gens.end(), [&](const IntegerVector& g) { return dot(h, g) == 0; }))
      tight.push_back(h);
  if (tight.size() == 0) return c;
  std::vector<IntegerVector> faceGens;
  for (const auto& g : c.generators())
    if (std::all_of(tight.begin(), tight.end(), [&](const IntegerVector& h) { return dot(h, g) == 0; }))
      faceGens.push_back(g);
  return Cone::fromGenerators(c.ambientRank(), faceGens);
}

}  // namespace

Cone Cone::fromGenerators(std::size_t ambientRank, const std::vector<IntegerVector>& generators) {
  const std::size_t n = ambientRank;
  std::vector<IntegerVector> gens;
  for (const auto& g : generators) {
    if (g.size() != n)
      throw Error(ErrorKind::RankMismatch, "generator " + torquot::toString(g) + " in a cone of rank " + std::to_string(n));
    if (!torquot::isZero(g)) gens.push_back(primitive(g));
  }
  sortUnique(gens);

  Cone c;
  c.ambientRank_ = n;
  c.equations_ = kernelBasis(IntegerMatrix::fromRows(n, gens)).basis();
  c.dim_ = n - c.equations_.size();

  // Facets are the extreme rays of the dual cone, made canonical by
  // projecting them into the span of the cone.
  DoubleDescription dual = doubleDescription(n, gens, {});
  for (const auto& u : dual.rays) c.halfspaces_.push_back(projectOrthogonal(u, c.equations_));
  sortUnique(c.halfspaces_);

  std::vector<IntegerVector> cut = c.equations_;
  cut.insert(cut.end(), c.halfspaces_.begin(), c.halfspaces_.end());
  c.lineality_ = kernelBasis(IntegerMatrix::fromRows(n, cut));

  // A generator is extreme iff its tight constraints have full rank in the
  // pointed quotient.
  const std::size_t wanted = n - c.lineality_.rank() - 1;
  if (c.lineality_.rank() == 0 && gens.size() == c.dim_) {
    // Simplicial: every generator is extreme.
    c.rays_ = std::move(gens);
    return c;
  }
  for (const auto& g : gens) {
    IntegerVector r = projectOrthogonal(g, c.lineality_.basis());
    if (torquot::isZero(r)) continue;
    std::vector<IntegerVector> active = c.equations_;
    for (const auto& h : c.halfspaces_)
      if (dot(h, r) == 0) active.push_back(h);
    if (rank(n, active) == wanted) c.rays_.push_back(std::move(r));
  }
  sortUnique(c.rays_);
  return c;
}

Cone Cone::fromInequalities(std::size_t ambientRank, const std::vector<IntegerVector>& inequalities,
                            const std::vector<IntegerVector>& equations) {
  for (const auto& e : equations)
    if (e.size() != ambientRank) throw Error(ErrorKind::RankMismatch, "equation of wrong rank");
  DoubleDescription primal = doubleDescription(ambientRank, inequalities, equations);
  std::vector<IntegerVector> gens = std::move(primal.rays);
  for (const auto& l : primal.lineality) {
    gens.push_back(l);
    gens.push_back(negated(l));
  }
  return fromGenerators(ambientRank, gens);
}

Cone Cone::linearSpan(const SublatticeBasis& lattice) {
  std::vector<IntegerVector> gens;
  for (const auto& b : lattice.basis()) {
    gens.push_back(b);
    gens.push_back(negated(b));
  }
  return fromGenerators(lattice.ambientRank(), gens);
}

std::vector<IntegerVector> Cone::generators() const {
  std::vector<IntegerVector> gens = rays_;
  for (const auto& l : lineality_.basis()) {
    gens.push_back(l);
    gens.push_back(negated(l));
  }
  return gens;
}

bool Cone::contains(const IntegerVector& v) const {
  if (v.size() != ambientRank_) throw Error(ErrorKind::RankMismatch, "membership test with a vector of wrong rank");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& h : halfspaces_)
    if (dot(h, v) < 0) return false;
  return true;
}

bool Cone::contains(const RationalPoint& v) const {
  if (v.size() != ambientRank_) throw Error(ErrorKind::RankMismatch, "membership test with a point of wrong rank");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& h : halfspaces_)
    if (dot(h, v) < 0) return false;
  return true;
}

bool Cone::containsCone(const Cone& other) const {
  checkRank(*this, other, "containsCone");
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_.basis()) {
    for (const auto& e : equations_)
      if (dot(e, l) != 0) return false;
    for (const auto& h : halfspaces_)
      if (dot(h, l) != 0) return false;
  }
  return true;
}

bool Cone::inRelativeInterior(const IntegerVector& v) const {
  if (!contains(v)) return false;
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const IntegerVector& h) { return dot(h, v) > 0; });
}

bool Cone::inRelativeInterior(const RationalPoint& v) const {
  if (!contains(v)) return false;
  return std::all_of(halfspaces_.begin(), halfspaces_.end(), [&](const IntegerVector& h) { return dot(h, v) > 0; });
}

IntegerVector Cone::interiorVector() const {
  IntegerVector s(ambientRank_);
  for (const auto& r : rays_) s = add(s, r);
  return s;
}

std::string Cone::toString() const {
  std::ostringstream os;
  os << "cone(rank " << ambientRank_ << "; rays";
  for (const auto& r : rays_) os << ' ' << torquot::toString(r);
  if (lineality_.rank() > 0) {
    os << "; lineality";
    for (const auto& l : lineality_.basis()) os << ' ' << torquot::toString(l);
  }
  os << ')';
  return os.str();
}

int compare(const Cone& a, const Cone& b) {
  if (a.ambientRank_ != b.ambientRank_) return a.ambientRank_ < b.ambientRank_ ? -1 : 1;
  if (a.dim_ != b.dim_) return a.dim_ < b.dim_ ? -1 : 1;
  if (int c = compareSequences(a.lineality_.basis(), b.lineality_.basis())) return c;
  return compareSequences(a.rays_, b.rays_);
}

bool contains(const Cone& c, const RationalPoint& v) { return c.contains(v); }
bool containsCone(const Cone& c, const Cone& d) { return c.containsCone(d); }

Cone intersect(const Cone& a, const Cone& b) {
  checkRank(a, b, "intersect");
  std::vector<IntegerVector> ineq = a.halfspaces();
  ineq.insert(ineq.end(), b.halfspaces().begin(), b.halfspaces().end());
  std::vector<IntegerVector> eq = a.equations();
  eq.insert(eq.end(), b.equations().begin(), b.equations().end());
  return Cone::fromInequalities(a.ambientRank(), ineq, eq);
}

Cone convexHullUnion(const Cone& a, const Cone& b) {
  checkRank(a, b, "convexHullUnion");
  std::vector<IntegerVector> gens = a.generators();
  for (auto& g : b.generators()) gens.push_back(std::move(g));
  return Cone::fromGenerators(a.ambientRank(), gens);
}

Cone convexHull(std::size_t ambientRank, const std::vector<Cone>& cones) {
  std::vector<IntegerVector> gens;
  for (const auto& c : cones) {
    if (c.ambientRank() != ambientRank) throw Error(ErrorKind::RankMismatch, "convexHull: cone of wrong rank");
    for (auto& g : c.generators()) gens.push_back(std::move(g));
  }
  return Cone::fromGenerators(ambientRank, gens);
}

std::vector<Cone> facets(const Cone& c) {
  std::vector<Cone> out;
  for (const auto& h : c.halfspaces()) {
    std::vector<IntegerVector> gens;
    for (const auto& g : c.generators())
      if (dot(h, g) == 0) gens.push_back(g);
    out.push_back(Cone::fromGenerators(c.ambientRank(), gens));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Cone> faces(const Cone& c) {
  // Every face is an intersection of facets, so close the facets' generator
  // sets under intersection and build each face once.
  const std::vector<IntegerVector> gens = c.generators();
  using Mask = std::vector<bool>;
  std::vector<Mask> facetMasks;
  for (const auto& h : c.halfspaces()) {
    Mask m(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i) m[i] = dot(h, gens[i]) == 0;
    facetMasks.push_back(std::move(m));
  }
  std::set<Mask> seen{Mask(gens.size(), true)};
  std::deque<Mask> pending{Mask(gens.size(), true)};
  while (!pending.empty()) {
    Mask cur = std::move(pending.front());
    pending.pop_front();
    for (const auto& f : facetMasks) {
      Mask next(gens.size());
      for (std::size_t i = 0; i < gens.size(); ++i) next[i] = cur[i] && f[i];
      if (seen.insert(next).second) pending.push_back(std::move(next));
    }
  }
  std::vector<Cone> out;
  for (const auto& m : seen) {
    std::vector<IntegerVector> faceGens;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (m[i]) faceGens.push_back(gens[i]);
    out.push_back(Cone::fromGenerators(c.ambientRank(), faceGens));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool isFaceOf(const Cone& face, const Cone& c) {
  checkRank(face, c, "isFaceOf");
  if (!c.containsCone(face)) return false;
  return faceCutOut(c, face.generators()) == face;
}

Cone minimalFaceContaining(const Cone& c, const Cone& s) {
  checkRank(c, s, "minimalFaceContaining");
  if (!c.containsCone(s)) throw Error(ErrorKind::NotContained, s.toString() + " is not contained in " + c.toString());
  return faceCutOut(c, s.generators());
}

SublatticeBasis linealitySpace(const Cone& c) { return c.lineality(); }

RationalPoint relativeInteriorPoint(const Cone& c) { return toRational(c.interiorVector()); }

bool relativeInteriorsMeet(const Cone& a, const Cone& b) {
  // If the relative interiors meet, relint(a ∩ b) = relint(a) ∩ relint(b).
  IntegerVector p = intersect(a, b).interiorVector();
  return a.inRelativeInterior(p) && b.inRelativeInterior(p);
}

Cone imageCone(const IntegerMatrix& p, const Cone& c) {
  if (p.cols() != c.ambientRank())
    throw Error(ErrorKind::RankMismatch, "imageCone: matrix has " + std::to_string(p.cols()) +
                                             " columns, cone has rank " + std::to_string(c.ambientRank()));
  return Cone::fromGenerators(p.rows(), p.apply(c.generators()));
}

}  // namespace torquot
