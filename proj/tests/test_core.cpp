#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "polyanti/axioms.hpp"
#include "polyanti/planar.hpp"
#include "polyanti/point.hpp"
#include "polyanti/rng.hpp"
#include "polyanti/staircase.hpp"

using namespace polyanti;
using namespace testutil;

TEST_CASE("join and meet are componentwise max and min") {
  CHECK(join(p2(2, 3), p2(5, 1)) == p2(5, 3));
  CHECK(join(p3(1, 1, 1), p3(1, 1, 1)) == p3(1, 1, 1));
  CHECK(join(p3(0, 2, 1), p3(2, 0, 1)) == p3(2, 2, 1));
  CHECK(meet(p2(2, 3), p2(5, 1)) == p2(2, 1));
  CHECK(meet(p2(7, 9), Point::origin(2)) == Point::origin(2));
  CHECK(meet(p2(6, 4), p2(9, 6)) == p2(6, 4));
  CHECK_THROWS_AS(join(p2(1, 1), p3(1, 1, 1)), invalid_input);
}

TEST_CASE("join/meet lattice laws on random points") {
  SplitMix64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    int d = trial % 2 ? 2 : 3;
    auto draw = [&] {
      return d == 2 ? Point(int(rng.below(9)), int(rng.below(9)))
                    : Point(int(rng.below(9)), int(rng.below(9)), int(rng.below(9)));
    };
    Point a = draw(), b = draw(), c = draw();
    CHECK(join(a, meet(a, b)) == a);
    CHECK(meet(a, join(a, b)) == a);
    CHECK(join(a, b) == join(b, a));
    CHECK(meet(a, b) == meet(b, a));
    CHECK(join(a, join(b, c)) == join(join(a, b), c));
    CHECK(meet(a, meet(b, c)) == meet(meet(a, b), c));
  }
}

TEST_CASE("point validation") {
  CHECK_THROWS_AS(Point(-1, 0), invalid_input);
  CHECK_THROWS_AS(Point(0, kMaxCoord + 1), invalid_input);
  CHECK_THROWS_AS(p2(0, 0).bumped(0, -1), invalid_input);
  CHECK(p2(2, 3).bumped(1, 1) == p2(2, 4));
}

TEST_CASE("accessibility") {
  CHECK(is_accessible(ps2({{0, 0}, {1, 0}, {1, 1}})));
  CHECK_FALSE(is_accessible(ps2({{0, 0}, {1, 1}})));
  CHECK(is_accessible(sample34()));
  auto v = check_accessible(ps2({{0, 0}, {1, 1}}));
  REQUIRE(v.has_value());
  CHECK(v->message == "(1,1) has no feasible decrement");
  CHECK_THROWS_AS(is_accessible(PointSet(2)), invalid_input);
}

TEST_CASE("union closure") {
  CHECK_FALSE(is_union_closed(ps2({{0, 0}, {1, 0}, {0, 1}})));
  Chain c({p2(0, 0), p2(1, 0), p2(1, 1), p2(2, 1)});
  CHECK(is_union_closed(c.as_point_set()));
  CHECK(is_union_closed(staircase::eppstein_set(2)));
}

TEST_CASE("intersection closure") {
  CHECK(is_intersection_closed(ps2({{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  CHECK(is_intersection_closed(ps2({{0, 0}, {1, 0}, {0, 1}})));
  CHECK_FALSE(is_intersection_closed(ps2({{1, 0}, {0, 1}, {1, 1}})));
}

TEST_CASE("strict exchange") {
  CHECK(satisfies_exchange_strict(ps2({{0, 0}, {1, 0}, {0, 1}, {1, 1}})));
  CHECK_FALSE(satisfies_exchange_strict(ps2({{0, 0}, {1, 0}, {2, 0}, {0, 1}})));
  Chain c({p2(0, 0), p2(0, 1), p2(1, 1)});
  CHECK(satisfies_exchange_strict(c.as_point_set()));
}

TEST_CASE("chain property") {
  CHECK(satisfies_chain_property(ps2({{0, 0}, {1, 0}, {1, 1}})));
  CHECK(satisfies_chain_property(ps2({{0, 0}, {1, 0}, {2, 0}, {2, 1}})));
  CHECK_FALSE(satisfies_chain_property(ps2({{0, 0}, {1, 1}})));
}

TEST_CASE("poly-antimatroid predicate") {
  PointSet box(2);
  for (int x = 0; x <= 2; ++x)
    for (int y = 0; y <= 2; ++y) box.insert(Point(x, y));
  CHECK(is_poly_antimatroid(box));
  CHECK(is_poly_antimatroid(sample34()));
  CHECK_FALSE(is_poly_antimatroid(ps2({{0, 0}, {1, 0}, {0, 1}})));
  CHECK(is_poly_antimatroid(ps2({{0, 0}})));  // singleton: vacuous exchange
}

TEST_CASE("exchange <-> union closure, exhaustive over the 3x3 box") {
  int subsets = 0;
  for_each_origin_subset_2d(2, 2, [&](const PointSet& s) {
    ++subsets;
    bool acc = is_accessible(s);
    CHECK((acc && satisfies_exchange_strict(s)) == (acc && is_union_closed(s)));
  });
  CHECK(subsets == 256);
}

TEST_CASE("poly-antimatroid implies the chain property") {
  for_each_origin_subset_2d(2, 2, [&](const PointSet& s) {
    if (is_poly_antimatroid(s)) CHECK(satisfies_chain_property(s));
  });
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    PointSet s = planar::random_antimatroidal_set(seed, 5, 4);
    CHECK(satisfies_chain_property(s));
  }
}

TEST_CASE("join_of_chains") {
  Chain lower({p2(0, 0), p2(1, 0), p2(1, 1)});
  Chain upper({p2(0, 0), p2(0, 1), p2(1, 1)});
  const Chain both[2] = {lower, upper};
  CHECK(join_of_chains(both) == ps2({{0, 0}, {1, 0}, {0, 1}, {1, 1}}));

  const Chain single[1] = {lower};
  CHECK(join_of_chains(single) == lower.as_point_set());

  CHECK_THROWS_AS(join_of_chains(std::span<const Chain>{}), invalid_input);
}

TEST_CASE("join_of_chains size bound and containment") {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Chain> chains;
    std::size_t bound = 1;
    int k = 2 + int(rng.below(2));
    for (int i = 0; i < k; ++i) {
      std::vector<Point> pts{Point(0, 0)};
      int w = int(rng.below(4)), h = int(rng.below(4));
      int x = 0, y = 0;
      while (x < w || y < h) {
        if (x < w && (y == h || rng.below(2))) ++x; else ++y;
        pts.emplace_back(x, y);
      }
      chains.emplace_back(pts);
      bound *= chains.back().size();
    }
    PointSet joined = join_of_chains(chains);
    CHECK(joined.size() <= bound);
    for (const Chain& c : chains)
      for (const Point& p : c.points()) CHECK(joined.contains(p));
  }
}

TEST_CASE("chain validation") {
  CHECK_THROWS_AS(Chain({p2(1, 0)}), invalid_input);                      // not origin
  CHECK_THROWS_AS(Chain({p2(0, 0), p2(1, 1)}), invalid_input);            // diagonal
  CHECK_THROWS_AS(Chain({p2(0, 0), p2(1, 0), p2(0, 0)}), invalid_input);  // decrement
  Chain ok({p2(0, 0), p2(0, 1)});
  CHECK(ok.length() == 1);
}
