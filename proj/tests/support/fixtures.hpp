#pragma once

#include <vector>

#include "torquot/document.hpp"

namespace fixtures {

using namespace torquot;

inline IntegerVector v(std::initializer_list<long> xs) {
  IntegerVector out;
  for (long x : xs) out.push_back(Integer(x));
  return out;
}

inline Cone cone(std::size_t n, std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<IntegerVector> g;
  for (const auto& x : gens) g.push_back(v(x));
  return Cone::fromGenerators(n, g);
}

inline SublatticeBasis lattice(std::size_t n, std::initializer_list<std::initializer_list<long>> gens) {
  std::vector<IntegerVector> g;
  for (const auto& x : gens) g.push_back(v(x));
  return SublatticeBasis(n, g);
}

inline ConeSystem fan(std::size_t n, const std::vector<Cone>& maximal) { return ConeSystem::faceClosureOf(n, maximal); }

// The affine plane: faces of the positive quadrant.
inline ConeSystem c2() { return fan(2, {cone(2, {{1, 0}, {0, 1}})}); }

// The plane minus the origin.
inline ConeSystem puncturedPlane() { return fan(2, {cone(2, {{1, 0}}), cone(2, {{0, 1}})}); }

// The plane blown up at the origin.
inline ConeSystem blowUp() { return fan(2, {cone(2, {{1, 0}, {1, 1}}), cone(2, {{1, 1}, {0, 1}})}); }

inline ConeSystem p1() { return fan(1, {cone(1, {{1}}), cone(1, {{-1}})}); }

inline ConeSystem p2() {
  return fan(2, {cone(2, {{1, 0}, {0, 1}}), cone(2, {{0, 1}, {-1, -1}}), cone(2, {{-1, -1}, {1, 0}})});
}

inline ConeSystem rayFan(std::size_t n, std::initializer_list<long> ray) {
  return fan(n, {Cone::fromGenerators(n, {v(ray)})});
}

// Two 2-dimensional cones in Z^3 whose images under (x,y,z) -> (x,y) overlap.
inline ConeSystem loopExample() {
  return fan(3, {cone(3, {{1, 0, 0}, {1, 2, 0}}), cone(3, {{1, 1, 1}, {0, 1, 0}})});
}

inline ConeSystem zeroFan() { return ConeSystem::faceClosureOf(0, {Cone::zero(0)}); }

}  // namespace fixtures
