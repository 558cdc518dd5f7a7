#pragma once

// Independent reference for full-dimensional cones in small rank: facet
// normals by enumerating (n-1)-subsets of generators, in plain int64.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace brute {

using Vec = std::vector<std::int64_t>;

inline std::int64_t det(std::vector<Vec> m) {
  // Laplace expansion; n <= 5 here.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vec> minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    std::int64_t sign = j % 2 ? -1 : 1;
    total += sign * m[0][j] * det(minor);
  }
  return total;
}

// Generalized cross product of n-1 vectors in Z^n.
inline Vec normal(const std::vector<Vec>& rows, std::size_t n) {
  Vec out(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vec> m;
    for (const auto& r : rows) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(r[k]);
      m.push_back(row);
    }
    out[j] = (j % 2 ? -1 : 1) * det(m);
  }
  std::int64_t g = 0;
  for (auto x : out) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : out) x /= g;
  return out;
}

inline std::int64_t dot(const Vec& a, const Vec& b) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Inner facet normals of cone(gens), assumed full-dimensional.
inline std::set<Vec> facetNormals(const std::vector<Vec>& gens, std::size_t n) {
  std::set<Vec> out;
  const std::size_t m = gens.size();
  if (m < n - 1) return out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n - 1), true);
  do {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) rows.push_back(gens[i]);
    Vec u = normal(rows, n);
    if (std::all_of(u.begin(), u.end(), [](auto x) { return x == 0; })) continue;
    bool pos = true, neg = true;
    for (const auto& g : gens) {
      if (dot(u, g) < 0) pos = false;
      if (dot(u, g) > 0) neg = false;
    }
    if (neg && !pos)
      for (auto& x : u) x = -x;
    if (pos || neg) out.insert(u);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

}  // namespace brute
