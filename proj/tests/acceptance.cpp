// Acceptance suite: prints one PASS/FAIL line per criterion (with elapsed
// time) and exits nonzero when any criterion fails. Each criterion enforces
// its own wall-clock budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "polyanti/axioms.hpp"
#include "polyanti/cdim.hpp"
#include "polyanti/harness.hpp"
#include "polyanti/planar.hpp"
#include "polyanti/rng.hpp"
#include "polyanti/staircase.hpp"

using namespace polyanti;
using namespace testutil;

namespace {

struct Failure {
  std::string what;
};

#define REQUIRE_THAT(cond, text)                 \
  do {                                           \
    if (!(cond)) throw Failure{text};            \
  } while (0)

// 1. the 34-point sample: class verdict, boundary traces with the five
//    frozen labels, and reconstruction from the two boundaries
void criterion_sample_reproduction() {
  PointSet s = sample34();
  REQUIRE_THAT(s.size() == 34, "sample must have 34 points");
  REQUIRE_THAT(planar::is_antimatroidal_2d(s), "sample must verify as antimatroidal-2d");

  Chain lower = planar::trace_lower_boundary(s);
  REQUIRE_THAT(lower.size() == 19, "lower boundary must have 19 points");
  REQUIRE_THAT(lower.points()[0] == p2(0, 0), "lower[0]");
  REQUIRE_THAT(lower.points()[4] == p2(4, 0), "lower[4]");
  REQUIRE_THAT(lower.points()[8] == p2(6, 2), "lower[8]");
  REQUIRE_THAT(lower.points()[10] == p2(6, 4), "lower[10]");
  REQUIRE_THAT(lower.points()[18] == p2(12, 6), "lower[18]");

  Chain upper = planar::trace_upper_boundary(s);
  REQUIRE_THAT(upper.size() == 19, "upper boundary must have 19 points");

  const Chain both[2] = {lower, upper};
  REQUIRE_THAT(join_of_chains(both) == s, "join of the two boundaries must reproduce the set");
}

// 2. exhaustive equivalence over the 3x3 box: definitional predicate <=> accessible +
//    union-closed <=> the polyomino characterization
void criterion_equivalence_exhaustive() {
  int subsets = 0;
  for_each_origin_subset_2d(2, 2, [&](const PointSet& s) {
    ++subsets;
    bool definitional = planar::is_antimatroidal_2d(s);
    bool axioms = is_accessible(s) && is_union_closed(s);
    bool characterization = planar::characterization_check(s);
    REQUIRE_THAT(definitional == axioms && axioms == characterization,
                 "equivalence disagreement on a 3x3 subset");
  });
  REQUIRE_THAT(subsets == 256, "expected 256 origin-containing subsets");
}

// 3. 1000 seeded random antimatroidal sets up to 12x12 are intersection-closed
void criterion_intersection_closure() {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    SplitMix64 size_rng(1000 + seed);
    int w = int(size_rng.below(13)), h = int(size_rng.below(13));
    PointSet s = planar::random_antimatroidal_set(seed, w, h);
    REQUIRE_THAT(is_intersection_closed(s), "generated set not intersection-closed");
  }
}

// 4. cdim_2d equals the exact search: exhaustive over the 4x4 box plus 200
//    random instances up to 6x6; value 2 iff an incomparable pair exists
void criterion_cdim_2d() {
  auto check_one = [](const PointSet& s) {
    cdim::CdimResult closed = cdim::cdim_2d(s);
    cdim::CdimResult exact = cdim::convex_dimension_exact(s);
    REQUIRE_THAT(exact.exact(), "exact search must complete at this scale");
    REQUIRE_THAT(closed.value() == exact.value(), "cdim_2d disagrees with the exact search");
    bool incomparable_pair = false;
    const auto& pts = s.points();
    for (std::size_t i = 0; i < pts.size() && !incomparable_pair; ++i)
      for (std::size_t j = i + 1; j < pts.size() && !incomparable_pair; ++j)
        incomparable_pair = !comparable(pts[i], pts[j]);
    REQUIRE_THAT(closed.value() == (incomparable_pair ? 2 : 1),
                 "value must be 2 exactly when an incomparable pair exists");
  };

  int antimatroidal = 0;
  for_each_origin_subset_2d(3, 3, [&](const PointSet& s) {
    if (!planar::is_antimatroidal_2d(s)) return;
    ++antimatroidal;
    check_one(s);
  });
  REQUIRE_THAT(antimatroidal > 0, "no antimatroidal subsets found");

  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    SplitMix64 size_rng(4000 + seed);
    PointSet s = planar::random_antimatroidal_set(seed, int(size_rng.below(7)),
                                                  int(size_rng.below(7)));
    check_one(s);
  }
}

// 5. lower bound n+1 for the two-layer family, n = 2..5; exact value 3 at n=2
void criterion_family_bounds() {
  for (int n = 2; n <= 5; ++n)
    REQUIRE_THAT(cdim::cdim_lower_bound(staircase::eppstein_set(n)) == n + 1,
                 "lower bound must be n+1");
  cdim::CdimResult r = cdim::convex_dimension_exact(staircase::eppstein_set(2));
  REQUIRE_THAT(r.exact() && r.value() == 3, "exact convex dimension at n=2 must be 3");
  REQUIRE_THAT(join_of_chains(r.witnesses) == staircase::eppstein_set(2),
               "witness chains must reproduce the set");
}

// 6. 500 seeded random regular sequences (<=5 steps, coordinates <=8): the
//    three traced chains join back exactly, have the forced length, and the
//    face-start variant joins exactly as well
void criterion_staircase_joins() {
  SplitMix64 face_rng(777);
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    staircase::StaircaseSpec spec = staircase::random_regular_spec(seed, 5, 8);
    REQUIRE_THAT(staircase::validate_regular(spec).ok, "generated spec must be regular");
    PointSet s = staircase::staircase_points(spec);
    Point m = s.max_point();

    staircase::ThreeChains t = staircase::three_chain_decomposition(s);
    std::size_t want = std::size_t(m[0] + m[1] + m[2]);
    REQUIRE_THAT(t.b_x.length() == want && t.b_y.length() == want && t.b_z.length() == want,
                 "chain length must be x_max+y_max+z_max");
    REQUIRE_THAT(staircase::verify_staircase_join(s), "three-chain join must reproduce the set");

    auto face_point = [&](int axis) {
      std::vector<Point> face;
      for (const Point& p : s.points())
        if (p[axis] == m[axis]) face.push_back(p);
      return face[face_rng.below(face.size())];
    };
    Chain h_z = staircase::trace_chain_3d(s, {0, 1, 2}, face_point(2));
    Chain h_x = staircase::trace_chain_3d(s, {1, 2, 0}, face_point(0));
    Chain h_y = staircase::trace_chain_3d(s, {2, 0, 1}, face_point(1));
    const Chain chains[3] = {h_x, h_y, h_z};
    REQUIRE_THAT(join_of_chains(chains) == s, "face-start chains must join to the set");
  }
}

// 7. the same 500-sequence corpus is accessible, union-closed and
//    intersection-closed
void criterion_staircase_closure() {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    PointSet s = staircase::staircase_points(staircase::random_regular_spec(seed, 5, 8));
    REQUIRE_THAT(is_poly_antimatroid(s), "staircase must be a poly-antimatroid");
    REQUIRE_THAT(is_intersection_closed(s), "staircase must be intersection-closed");
  }
}

// 8. exhaustive box (2,2,1): both claim scans complete with definite verdicts,
//    reports are byte-identical for 1 vs 4 workers, certificates re-verify
void criterion_conjecture_harness() {
  Point box = p3(2, 2, 1);

  harness::SearchReport stair1 = harness::test_conjecture_staircase(box, 1);
  harness::SearchReport stair4 = harness::test_conjecture_staircase(box, 4);
  REQUIRE_THAT(harness::serialize_report(stair1) == harness::serialize_report(stair4),
               "staircase reports must be byte-identical for 1 vs 4 workers");
  REQUIRE_THAT(stair1.counts.scanned == 131072, "expected 2^17 origin-containing subsets");
  REQUIRE_THAT(stair1.indeterminates.empty(), "every staircase verdict must be definite");
  REQUIRE_THAT(stair1.counts.claim_holds + stair1.counterexamples.size() +
                       stair1.counts.trivial ==
                   stair1.counts.poset_poly_antimatroids,
               "every poset poly-antimatroid must be classified");
  for (const auto& ce : stair1.counterexamples) {
    REQUIRE_THAT(staircase::is_poset_poly_antimatroid(ce.set), "counterexample class re-check");
    REQUIRE_THAT(staircase::is_step_staircase(ce.set).verdict == staircase::StaircaseVerdict::no,
                 "counterexample must re-verify");
  }

  harness::SearchReport cdim1 = harness::test_cdim_bound(box, 3, 1);
  harness::SearchReport cdim4 = harness::test_cdim_bound(box, 3, 4);
  REQUIRE_THAT(harness::serialize_report(cdim1) == harness::serialize_report(cdim4),
               "cdim reports must be byte-identical for 1 vs 4 workers");
  REQUIRE_THAT(cdim1.indeterminates.empty(), "every cdim verdict must be definite");
  for (const auto& ce : cdim1.counterexamples) {
    auto r = cdim::convex_dimension_exact(ce.set);
    REQUIRE_THAT(r.exact() && r.value() > 3, "cdim counterexample must re-verify");
  }

  std::printf("    staircase claim: %llu hold, %zu counterexamples; cdim<=3: %llu hold, %zu counterexamples\n",
              (unsigned long long)stair1.counts.claim_holds, stair1.counterexamples.size(),
              (unsigned long long)cdim1.counts.claim_holds, cdim1.counterexamples.size());
}

struct Criterion {
  int number;
  const char* label;
  double budget_seconds;
  std::function<void()> run;
};

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "34-point sample: class verdict, boundary labels, join reconstruction", 1.0,
       criterion_sample_reproduction},
      {2, "definition/axioms/characterization agree on all 256 subsets of the 3x3 box", 1.0,
       criterion_equivalence_exhaustive},
      {3, "1000 random antimatroidal sets up to 12x12 are intersection-closed", 10.0,
       criterion_intersection_closure},
      {4, "cdim_2d matches exact search (exhaustive 4x4 box + 200 random up to 6x6)", 30.0,
       criterion_cdim_2d},
      {5, "two-layer family: lower bound n+1 for n=2..5, exact value 3 at n=2", 30.0,
       criterion_family_bounds},
      {6, "500 random staircases: three-chain and face-start joins are exact", 60.0,
       criterion_staircase_joins},
      {7, "500 random staircases: accessible, union-closed, intersection-closed", 60.0,
       criterion_staircase_closure},
      {8, "box (2,2,1) conjecture scans: definite verdicts, 1 vs 4 workers byte-identical", 300.0,
       criterion_conjecture_harness},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = e.what();
    }
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (error.empty() && elapsed > c.budget_seconds)
      error = "over time budget of " + std::to_string(c.budget_seconds) + "s";
    if (error.empty()) {
      std::printf("PASS criterion %d (%.2fs): %s\n", c.number, elapsed, c.label);
    } else {
      ++failures;
      std::printf("FAIL criterion %d (%.2fs): %s -- %s\n", c.number, elapsed, c.label,
                  error.c_str());
    }
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
