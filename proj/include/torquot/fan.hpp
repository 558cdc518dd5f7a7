#pragma once

// Finite systems of cones, quasifans and fans.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "torquot/cone.hpp"

namespace torquot {

// A finite set of cones in a common lattice, kept sorted and deduplicated.
// Quasifans and fans are cone systems that pass validateFan; the type does
// not enforce it.
class ConeSystem {
 public:
  ConeSystem() = default;
  ConeSystem(std::size_t ambientRank, std::vector<Cone> cones);

  // The system of all faces of the given cones.
  static ConeSystem faceClosureOf(std::size_t ambientRank, const std::vector<Cone>& cones);

  std::size_t ambientRank() const noexcept { return ambientRank_; }
  const std::vector<Cone>& cones() const noexcept { return cones_; }
  std::size_t size() const noexcept { return cones_.size(); }
  bool empty() const noexcept { return cones_.empty(); }

  ConeSystem faceClosure() const { return faceClosureOf(ambientRank_, cones_); }
  std::vector<Cone> maximalCones() const;
  // The one-dimensional cones.
  std::vector<Cone> rays() const;
  std::optional<std::size_t> indexOf(const Cone& c) const;
  bool contains(const Cone& c) const { return indexOf(c).has_value(); }

  std::string toString() const;

  bool operator==(const ConeSystem& other) const {
    return ambientRank_ == other.ambientRank_ && cones_ == other.cones_;
  }

 private:
  std::size_t ambientRank_ = 0;
  std::vector<Cone> cones_;
};

enum class FanClass { ConeSystem, Quasifan, Fan };
std::string_view fanClassName(FanClass c);

enum class ViolationKind { EmptySystem, NotStrictlyConvex, MissingFace, NotCommonFace };
std::string_view violationKindName(ViolationKind k);

struct Violation {
  ViolationKind kind;
  // Indices into ConeSystem::cones(); `second` is only set for pair conditions.
  std::size_t first = 0;
  std::optional<std::size_t> second;
};

struct FanValidation {
  FanClass classification = FanClass::ConeSystem;
  std::vector<Violation> violations;
  bool isFan() const { return classification == FanClass::Fan; }
  bool isQuasifan() const { return classification != FanClass::ConeSystem; }
};

FanValidation validateFan(const ConeSystem& system);
inline std::vector<Cone> maximalCones(const ConeSystem& s) { return s.maximalCones(); }

struct MapOfFansCheck {
  bool isMap = true;
  // For each maximal source cone (in canonical order), the index of a target
  // cone containing its image.
  std::vector<std::size_t> targets;
  std::optional<Cone> failingSource;
};

MapOfFansCheck isMapOfFans(const IntegerMatrix& f, const ConeSystem& source, const ConeSystem& target);

// Face closure of the images of the maximal cones of `system` under p.
ConeSystem imageOfMaximalCones(const IntegerMatrix& p, const ConeSystem& system);

struct FanQuotient {
  SublatticeBasis lattice;
  IntegerMatrix projection;
  ConeSystem fan;
};

// Collapses the common lineality of a quasifan. Throws InvalidQuasifan.
FanQuotient quasifanToFan(const ConeSystem& quasifan);

// Face closure of the maximal cones having tau as a face.
ConeSystem starSubfan(const ConeSystem& fan, const Cone& tau);
// Projects the star of tau along Lin(tau) ∩ N.
FanQuotient orbitClosureFan(const ConeSystem& fan, const Cone& tau);

// True iff the support is all of R^n: every maximal cone is full-dimensional
// and every facet of a maximal cone lies in two maximal cones.
bool isComplete(const ConeSystem& fan);

}  // namespace torquot
