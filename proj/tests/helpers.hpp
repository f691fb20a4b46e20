#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <utility>
#include <vector>

#include "polyanti/point.hpp"

namespace testutil {

using polyanti::Point;
using polyanti::PointSet;

inline Point p2(int x, int y) { return Point(x, y); }
inline Point p3(int x, int y, int z) { return Point(x, y, z); }

inline PointSet ps2(std::initializer_list<std::pair<int, int>> pts) {
  PointSet s(2);
  for (auto [x, y] : pts) s.insert(Point(x, y));
  return s;
}

inline PointSet ps3(std::initializer_list<std::array<int, 3>> pts) {
  PointSet s(3);
  for (auto [x, y, z] : pts) s.insert(Point(x, y, z));
  return s;
}

// The 34-point antimatroidal set used as the worked example everywhere.
inline PointSet sample34() {
  PointSet s(2);
  const std::pair<int, std::pair<int, int>> rows[] = {
      {0, {0, 4}}, {1, {1, 4}}, {2, {2, 6}}, {3, {2, 6}},
      {4, {6, 11}}, {5, {8, 12}}, {6, {9, 12}}};
  for (auto [y, span] : rows)
    for (int x = span.first; x <= span.second; ++x) s.insert(Point(x, y));
  return s;
}

// Every origin-containing subset of the 2D box [0..bx] x [0..by], visited as
// ascending bitmasks over row-major cell indices (x fastest). Test-side
// enumerator, independent of the harness module.
inline void for_each_origin_subset_2d(int bx, int by,
                                      const std::function<void(const PointSet&)>& visit) {
  int nx = bx + 1, cells = (bx + 1) * (by + 1);
  for (std::uint64_t mask = 1; mask < (1ull << cells); mask += 2) {
    PointSet s(2);
    for (int i = 0; i < cells; ++i)
      if (mask >> i & 1) s.insert(Point(i % nx, i / nx));
    visit(s);
  }
}

// Monotone lattice path count oracle: binomial(w+h, w).
inline std::uint64_t path_count(int w, int h) {
  std::uint64_t r = 1;
  for (int i = 1; i <= w; ++i) r = r * (h + i) / i;
  return r;
}

// Brute-force maximum antichain by subset enumeration (n <= 20).
inline std::size_t brute_max_antichain(const std::vector<Point>& pts) {
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (1ull << pts.size()); ++mask) {
    std::vector<const Point*> chosen;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (mask >> i & 1) chosen.push_back(&pts[i]);
    bool antichain = true;
    for (std::size_t i = 0; i < chosen.size() && antichain; ++i)
      for (std::size_t j = 0; j < chosen.size() && antichain; ++j)
        if (i != j && leq(*chosen[i], *chosen[j])) antichain = false;
    if (antichain) best = std::max(best, chosen.size());
  }
  return best;
}

}  // namespace testutil
