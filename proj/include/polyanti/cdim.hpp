#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "polyanti/point.hpp"

namespace polyanti::cdim {

struct ChainEnumeration {
  std::vector<Chain> chains;
  bool overflowed = false;  // cap hit; `chains` holds the first `cap` found
};

// Every monotone unit-step path inside `s` from the origin to the
// coordinatewise maximum member, in depth-first order with coordinate index
// ascending. Throws invalid_input when the maximum member is missing.
ChainEnumeration enumerate_maximal_chains(const PointSet& s, std::size_t cap);

// Non-origin members that are not the join of strictly smaller members.
PointSet join_irreducibles(const PointSet& s);

// Largest pairwise-incomparable subset under dominance, exact via minimum
// chain cover (augmenting-path bipartite matching + König witness).
struct AntichainResult {
  std::size_t size = 0;
  std::vector<Point> witness;  // sorted, pairwise incomparable
};
AntichainResult max_antichain(const PointSet& points);

// 2D shortcut: longest strictly-decreasing y-subsequence after x-major
// sort. Must agree with max_antichain; property-tested, not assumed.
std::size_t max_antichain_2d_size(const PointSet& points);

// max(1, size of a maximum antichain of join-irreducibles).
int cdim_lower_bound(const PointSet& s);

struct SearchCaps {
  std::size_t chain_cap = 10000;
  std::size_t subset_cap = 2'000'000;
};

// Exact or bounded convex dimension plus certificates.
struct CdimResult {
  int lower = 1;
  std::optional<int> upper;     // certified; absent when nothing is known
  std::vector<Chain> witnesses;  // present iff exact; join equals the input
  PointSet irreducible_antichain;
  bool exhausted = false;  // a cap stopped the search before exactness

  bool exact() const { return upper.has_value() && *upper == lower; }
  int value() const;  // requires exact()
};

// Minimum number of maximal chains whose join reproduces `s`, found by
// testing k-subsets of the enumerated chains in lexicographic index order,
// k rising from the certified lower bound. Never returns a wrong exact
// value: when a cap interrupts, the result is an interval with
// exhausted = true.
CdimResult convex_dimension_exact(const PointSet& s, SearchCaps caps = {});

// Closed-form 2D answer: 1 for a chain-shaped set, else 2 with the two
// boundary traces as witnesses. Requires a 2D set satisfying the
// antimatroidal definition.
CdimResult cdim_2d(const PointSet& s);

}  // namespace polyanti::cdim
