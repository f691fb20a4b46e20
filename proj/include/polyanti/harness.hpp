#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "polyanti/point.hpp"

namespace polyanti::harness {

// Largest box scanned exhaustively; bigger boxes use seeded random growth.
inline constexpr std::size_t kExhaustiveCellLimit = 20;

std::size_t box_cell_count(const Point& box);

// Visits every subset of [0..box_x]x[0..box_y]x[0..box_z] that contains the
// origin and is a poly-antimatroid (optionally also intersection-closed),
// exactly once, in canonical order: subsets encoded as integers over
// row-major cell indices (x fastest), ascending. Throws invalid_input when
// the box exceeds the exhaustive limit.
void enumerate_poly_antimatroids(const Point& box, bool require_intersection_closed,
                                 const std::function<void(const PointSet&)>& emit);

// Randomized mode for larger boxes: grow from {origin} by uniform draws over
// the feasible unit augmentations (points whose addition keeps the set
// accessible and union-closed, plus intersection-closed when required),
// `growth_steps` times or until no augmentation exists. splitmix64 stream,
// one draw per step.
PointSet sample_poly_antimatroid(const Point& box, std::uint64_t seed,
                                 bool require_intersection_closed,
                                 std::size_t growth_steps);

struct SearchCounts {
  std::uint64_t scanned = 0;
  std::uint64_t accessible = 0;
  std::uint64_t union_closed = 0;
  std::uint64_t intersection_closed = 0;
  std::uint64_t poly_antimatroids = 0;
  std::uint64_t poset_poly_antimatroids = 0;
  std::uint64_t claim_holds = 0;  // staircase: yes verdicts; cdim: within bound
  std::uint64_t trivial = 0;      // singleton {origin}, outside the claims
};

struct Counterexample {
  std::string claim;  // "staircase" or "cdim<=B"
  PointSet set;
};

struct SearchReport {
  Point box = Point(0, 0, 0);
  std::string claim;  // "staircase" | "cdim"
  int bound = 0;      // meaningful for the cdim claim
  std::string mode = "exhaustive";
  SearchCounts counts;
  std::vector<Counterexample> counterexamples;
  std::vector<PointSet> indeterminates;
  double elapsed_seconds = 0.0;  // never serialized; reports must be
                                 // byte-identical across worker counts
};

// When non-empty, every counterexample is written to this directory the
// moment it is found (ce_<claim>_<subset-index>.pts, point-file format with
// the violated-claim tag as a comment), so interrupted runs keep their
// findings. Filenames derive from subset indices and are identical for any
// worker count.
struct PersistOptions {
  std::string counterexample_dir;
};

// Exhaustive claim scans. Workers partition the subset-index range into
// contiguous slices; merged output is bit-identical to a single-threaded run.
SearchReport test_conjecture_staircase(const Point& box, int workers = 1,
                                       const PersistOptions& persist = {});
SearchReport test_cdim_bound(const Point& box, int bound = 3, int workers = 1,
                             const PersistOptions& persist = {});

// Randomized claim scan over `samples` grown sets (see
// sample_poly_antimatroid); sample index k uses seed `seed` + k.
SearchReport test_claim_random(const Point& box, const std::string& claim, int bound,
                               std::size_t samples, std::uint64_t seed,
                               const PersistOptions& persist = {});

// Deterministic report bytes (no timings).
std::string serialize_report(const SearchReport& report);

}  // namespace polyanti::harness
