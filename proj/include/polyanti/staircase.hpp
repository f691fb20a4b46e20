#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyanti/point.hpp"

namespace polyanti::staircase {

// Axis-aligned integer box with more than one lattice point.
class Cuboid {
 public:
  Cuboid(const Point& min_corner, const Point& max_corner);

  const Point& min_corner() const noexcept { return min_; }
  const Point& max_corner() const noexcept { return max_; }
  std::uint64_t volume() const noexcept;
  bool contains(const Point& p) const;
  std::vector<Point> points() const;

  friend bool operator==(const Cuboid&, const Cuboid&) = default;

 private:
  Point min_;
  Point max_;
};

struct StaircaseSpec {
  std::vector<Cuboid> cuboids;
};

// One failed regularity condition: 'a' anchors the first min corner at the
// origin; 'b'/'c'/'d' couple step `index` to step `index`+1.
struct RegularityViolation {
  char condition;
  std::size_t index;
  std::string detail;
};

struct RegularityReport {
  bool ok = true;
  std::vector<RegularityViolation> violations;
};

// Checks the four regularity conditions; adjacency-only coupling, exactly as
// stated. Throws invalid_input on an empty sequence.
RegularityReport validate_regular(const StaircaseSpec& spec);

// Union of all lattice points of a regular sequence. Throws invalid_input
// when the sequence is not regular.
PointSet staircase_points(const StaircaseSpec& spec);

// Descend from `start` taking the first axis in `axis_order` whose unit
// decrement stays in `s`, until the origin; returned ascending. `axis_order`
// is a permutation of {0,1,2}.
Chain trace_chain_3d(const PointSet& s, const std::array<int, 3>& axis_order,
                     const Point& start);

// The three traces from the maximum member: order (x,y,z) gives b_z,
// (y,z,x) gives b_x, (z,x,y) gives b_y.
struct ThreeChains {
  Chain b_x;
  Chain b_y;
  Chain b_z;
};
ThreeChains three_chain_decomposition(const PointSet& s);

// Does the join of the three traced chains reproduce the set exactly?
// Computed, never assumed; expected true for every valid staircase.
bool verify_staircase_join(const PointSet& s);

// Two-layer family over a (N+1)x(N+1) base: top-layer cells require
// x + y >= N. A poly-antimatroid whose convex dimension is at least N+1.
PointSet eppstein_set(int n);

// Poly-antimatroid that is also closed under intersection.
bool is_poset_poly_antimatroid(const PointSet& s);

enum class StaircaseVerdict { yes, no, indeterminate };

struct StaircaseCaps {
  std::size_t max_cuboids = 64;   // inclusion-maximal sub-cuboids considered
  std::size_t max_steps = 8;      // sequence length searched
  std::size_t node_cap = 1 << 22;  // search states expanded
};

struct StaircaseDecision {
  StaircaseVerdict verdict = StaircaseVerdict::no;
  std::optional<StaircaseSpec> witness;  // present iff verdict is yes
};

// Decision procedure: fast rejection through the poset poly-antimatroid
// predicate, then a bounded exhaustive search over sequences of
// inclusion-maximal sub-cuboids for a regular sequence whose union equals
// `s`. Cap hits yield `indeterminate`, never a guessed "no". Requires
// |s| > 1 and dimension 3.
StaircaseDecision is_step_staircase(const PointSet& s, StaircaseCaps caps = {});

// All inclusion-maximal cuboids contained in `s`, sorted by corners.
std::vector<Cuboid> maximal_subcuboids(const PointSet& s);

// Seeded regular sequence: corners drawn from a splitmix64 stream, each step
// growing the min corner within the previous cuboid and the max corner up to
// `max_coord` (strictly, per the regularity conditions). Stops early when the
// max corner saturates. max_steps >= 1, max_coord >= 1.
StaircaseSpec random_regular_spec(std::uint64_t seed, int max_steps, int max_coord);

}  // namespace polyanti::staircase
