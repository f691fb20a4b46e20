#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "polyanti/axioms.hpp"
#include "polyanti/point.hpp"

namespace polyanti::planar {

// Axis neighbors, clipped at the coordinate axes. 2D only.
std::vector<Point> n4_neighborhood(const Point& p);

// Axis and diagonal neighbors, clipped. 2D only.
std::vector<Point> n8_neighborhood(const Point& p);

// Single 4-connected component?
bool is_n4_connected(const PointSet& s);

// Every row and column meets the set in a contiguous interval (or not at
// all).
bool is_orthogonally_convex(const PointSet& s);

// Unordered lower/upper boundary membership sets:
//   lower: (x+1,y) ∉ S or (x,y-1) ∉ S or (x+1,y-1) ∉ S
//   upper: (x-1,y) ∉ S or (x,y+1) ∉ S or (x-1,y+1) ∉ S
// Out-of-quadrant neighbors count as absent. The two sets may overlap.
struct BoundarySets {
  PointSet lower;
  PointSet upper;
};
BoundarySets boundary_point_sets(const PointSet& s);

// Boundary traces from (x_max, y_max) down to the origin, returned
// ascending. Upper prefers the x-decrement, lower the y-decrement. On a set
// that is not antimatroidal the walk can strand; that raises invalid_input
// naming the stuck position.
Chain trace_upper_boundary(const PointSet& s);
Chain trace_lower_boundary(const PointSet& s);

struct BoundaryDecomposition {
  Chain lower;
  Chain upper;
};
BoundaryDecomposition decompose_boundary(const PointSet& s);

// The literal 2D antimatroidal-point-set definition: A1 plus the three-case
// exchange split.
std::optional<Violation> check_antimatroidal_2d(const PointSet& s);
inline bool is_antimatroidal_2d(const PointSet& s) { return !check_antimatroidal_2d(s); }

// Orthogonally convex + 4-connected + both boundary sets order (x-major
// lexicographically) into monotone unit-step paths from the origin to
// (x_max, y_max).
bool characterization_check(const PointSet& s);

// Join of two uniformly sampled monotone lattice paths from (0,0) to
// (width, height). Deterministic for a fixed seed: splitmix64 stream, one
// draw per step, x-step taken when draw % (rx+ry) < rx with rx, ry the
// remaining x/y step budgets; the first path is sampled fully, then the
// second.
PointSet random_antimatroidal_set(std::uint64_t seed, int width, int height);

}  // namespace polyanti::planar
