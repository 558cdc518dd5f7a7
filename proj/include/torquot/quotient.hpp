#pragma once

// Quotient quasifans and quotient fans of a cone system by a primitive
// sublattice.

#include <cstddef>
#include <string>
#include <vector>

#include "torquot/fan.hpp"

namespace torquot {

// One pass through the merge loop. Indices refer to the canonical order of
// the working system before the step.
struct LoopStep {
  enum class Replaced { First, Second };

  std::size_t iteration = 0;
  std::size_t first = 0;
  std::size_t second = 0;
  // The minimal face whose hull with the replaced cone is taken.
  Cone face;
  Replaced replaced = Replaced::First;
  Cone replacement;
  // Termination measures after the step: the number of cones, and the number
  // of (cone, projected generator) incidences.
  std::size_t coneCount = 0;
  std::size_t incidenceCount = 0;
};

struct QuotientTrace {
  std::size_t initialConeCount = 0;
  std::size_t initialIncidenceCount = 0;
  std::vector<LoopStep> steps;

  // The cone count never grows, and while it stays put the incidence count
  // strictly grows.
  bool measuresMonotone() const;
  // One line per entry, suitable for diffing.
  std::vector<std::string> lines() const;
};

struct QuasifanResult {
  IntegerMatrix projection;  // canonical N -> N/L
  ConeSystem quasifan;       // in N/L, face-closed
  QuotientTrace trace;
};

// Projects the maximal cones along L and merges improperly intersecting
// images until the system is a quasifan. Pair selection takes the
// lexicographically smallest violating ordered pair.
QuasifanResult quotientQuasifan(const ConeSystem& system, const SublatticeBasis& sublattice);

struct QuotientResult {
  ConeSystem source;
  SublatticeBasis sublattice;
  SublatticeBasis enlargedKernel;
  IntegerMatrix projection;  // canonical N -> N / enlargedKernel
  ConeSystem quotientFan;
  IntegerMatrix intermediateProjection;  // N -> N/L
  ConeSystem intermediateQuasifan;
  QuotientTrace trace;

  // Compares the rank of the enlarged kernel, the projection and the fan.
  bool sameQuotient(const QuotientResult& other) const {
    return enlargedKernel.rank() == other.enlargedKernel.rank() && projection == other.projection &&
           quotientFan == other.quotientFan;
  }
};

QuotientResult quotientFan(const ConeSystem& system, const SublatticeBasis& sublattice);

// Independent construction for rank(N/L) = 2: classes of maximal cones
// linked by chains of cones whose projected relative interiors overlap are
// merged, then the common lineality of the projected hulls is collapsed.
QuotientResult codim2QuotientOracle(const ConeSystem& fan, const SublatticeBasis& sublattice);

}  // namespace torquot
