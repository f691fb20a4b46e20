#include "polyanti/staircase.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "polyanti/axioms.hpp"
#include "polyanti/rng.hpp"

namespace polyanti::staircase {

namespace {

void require_3d(const Point& p, const char* what) {
  if (p.dim() != 3) throw invalid_input(std::string(what) + " must be 3-dimensional");
}

}  // namespace

Cuboid::Cuboid(const Point& min_corner, const Point& max_corner)
    : min_(min_corner), max_(max_corner) {
  require_3d(min_corner, "cuboid corner");
  require_3d(max_corner, "cuboid corner");
  if (!leq(min_, max_))
    throw invalid_input("cuboid corners out of order: " + min_.str() + " vs " + max_.str());
  if (min_ == max_) throw invalid_input("cuboid must contain more than one point");
}

std::uint64_t Cuboid::volume() const noexcept {
  std::uint64_t v = 1;
  for (int i = 0; i < 3; ++i) v *= std::uint64_t(max_[i] - min_[i] + 1);
  return v;
}

bool Cuboid::contains(const Point& p) const {
  return p.dim() == 3 && leq(min_, p) && leq(p, max_);
}

std::vector<Point> Cuboid::points() const {
  std::vector<Point> out;
  out.reserve(volume());
  for (int z = min_[2]; z <= max_[2]; ++z)
    for (int y = min_[1]; y <= max_[1]; ++y)
      for (int x = min_[0]; x <= max_[0]; ++x) out.emplace_back(x, y, z);
  return out;
}

namespace {

bool leq_with_strict(const Point& a, const Point& b) { return leq(a, b) && !(a == b); }

}  // namespace

RegularityReport validate_regular(const StaircaseSpec& spec) {
  if (spec.cuboids.empty()) throw invalid_input("regular sequence must be non-empty");
  RegularityReport report;
  auto fail = [&](char cond, std::size_t index, std::string detail) {
    report.ok = false;
    report.violations.push_back({cond, index, std::move(detail)});
  };

  if (!spec.cuboids.front().min_corner().is_origin())
    fail('a', 0, "first min corner is " + spec.cuboids.front().min_corner().str());

  for (std::size_t i = 0; i + 1 < spec.cuboids.size(); ++i) {
    const Cuboid& cur = spec.cuboids[i];
    const Cuboid& nxt = spec.cuboids[i + 1];
    if (!leq_with_strict(cur.min_corner(), nxt.min_corner()))
      fail('b', i, "min corners " + cur.min_corner().str() + " -> " + nxt.min_corner().str() +
                       " must grow with one strict coordinate");
    if (!leq(nxt.min_corner(), cur.max_corner()))
      fail('c', i, "next min corner " + nxt.min_corner().str() + " escapes previous max corner " +
                       cur.max_corner().str());
    if (!leq_with_strict(cur.max_corner(), nxt.max_corner()))
      fail('d', i, "max corners " + cur.max_corner().str() + " -> " + nxt.max_corner().str() +
                       " must grow with one strict coordinate");
  }
  return report;
}

PointSet staircase_points(const StaircaseSpec& spec) {
  RegularityReport report = validate_regular(spec);
  if (!report.ok)
    throw invalid_input("sequence is not regular: condition " +
                        std::string(1, report.violations.front().condition) + " at step " +
                        std::to_string(report.violations.front().index) + " (" +
                        report.violations.front().detail + ")");
  PointSet out(3);
  for (const Cuboid& c : spec.cuboids)
    for (const Point& p : c.points()) out.insert(p);
  return out;
}

Chain trace_chain_3d(const PointSet& s, const std::array<int, 3>& axis_order,
                     const Point& start) {
  if (s.dim() != 3) throw invalid_input("3D trace on a non-3D set");
  bool seen[3] = {false, false, false};
  for (int ax : axis_order) {
    if (ax < 0 || ax > 2 || seen[ax]) throw invalid_input("axis order must be a permutation of x,y,z");
    seen[ax] = true;
  }
  return polyanti::detail::trace_descending(s, axis_order, start);
}

ThreeChains three_chain_decomposition(const PointSet& s) {
  if (s.dim() != 3 || s.empty()) throw invalid_input("decomposition needs a non-empty 3D set");
  Point m = s.max_point();
  if (!s.contains(m))
    throw invalid_input("maximum member " + m.str() + " is not in the set");
  Chain b_z = trace_chain_3d(s, {0, 1, 2}, m);
  Chain b_x = trace_chain_3d(s, {1, 2, 0}, m);
  Chain b_y = trace_chain_3d(s, {2, 0, 1}, m);
  return ThreeChains{std::move(b_x), std::move(b_y), std::move(b_z)};
}

bool verify_staircase_join(const PointSet& s) {
  ThreeChains t = three_chain_decomposition(s);
  const Chain chains[3] = {t.b_x, t.b_y, t.b_z};
  return join_of_chains(chains) == s;
}

PointSet eppstein_set(int n) {
  if (n < 1) throw invalid_input("family parameter must be positive");
  PointSet out(3);
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y) {
      out.insert(Point(x, y, 0));
      if (x + y >= n) out.insert(Point(x, y, 1));
    }
  return out;
}

bool is_poset_poly_antimatroid(const PointSet& s) {
  return is_poly_antimatroid(s) && is_intersection_closed(s);
}

std::vector<Cuboid> maximal_subcuboids(const PointSet& s) {
  if (s.dim() != 3) throw invalid_input("sub-cuboid search on a non-3D set");
  const auto& pts = s.points();

  auto box_inside = [&](const Point& lo, const Point& hi) {
    for (int z = lo[2]; z <= hi[2]; ++z)
      for (int y = lo[1]; y <= hi[1]; ++y)
        for (int x = lo[0]; x <= hi[0]; ++x)
          if (!s.contains_coords(x, y, z)) return false;
    return true;
  };
  // a full slab one unit beyond a face keeps the box inside s?
  auto extendable = [&](const Point& lo, const Point& hi) {
    for (int ax = 0; ax < 3; ++ax) {
      {
        int lo_c[3] = {lo[0], lo[1], lo[2]};
        int hi_c[3] = {hi[0], hi[1], hi[2]};
        hi_c[ax] = lo_c[ax] = hi[ax] + 1;
        if (box_inside(Point(lo_c[0], lo_c[1], lo_c[2]), Point(hi_c[0], hi_c[1], hi_c[2])))
          return true;
      }
      if (lo[ax] > 0) {
        int lo_c[3] = {lo[0], lo[1], lo[2]};
        int hi_c[3] = {hi[0], hi[1], hi[2]};
        lo_c[ax] = hi_c[ax] = lo[ax] - 1;
        if (box_inside(Point(lo_c[0], lo_c[1], lo_c[2]), Point(hi_c[0], hi_c[1], hi_c[2])))
          return true;
      }
    }
    return false;
  };

  std::vector<Cuboid> out;
  for (const Point& lo : pts)
    for (const Point& hi : pts) {
      if (!leq(lo, hi) || lo == hi) continue;
      if (!box_inside(lo, hi)) continue;
      if (extendable(lo, hi)) continue;
      out.emplace_back(lo, hi);
    }
  std::sort(out.begin(), out.end(), [](const Cuboid& a, const Cuboid& b) {
    LexLess less;
    if (!(a.min_corner() == b.min_corner())) return less(a.min_corner(), b.min_corner());
    return less(a.max_corner(), b.max_corner());
  });
  return out;
}

namespace {

using Mask = std::vector<std::uint64_t>;

struct MaskHash {
  std::size_t operator()(const std::pair<int, Mask>& key) const noexcept {
    std::uint64_t h = 0x9E3779B97F4A7C15ull * std::uint64_t(key.first + 1);
    detail::KeyHash mix;
    for (std::uint64_t w : key.second) h = h * 1099511628211ull ^ mix(w);
    return std::size_t(h);
  }
};

struct StaircaseSearch {
  const std::vector<Cuboid>& cuboids;
  const std::vector<Mask>& coverage;
  const Mask& full;
  const std::vector<std::vector<int>>& successors;
  StaircaseCaps caps;

  std::size_t nodes = 0;
  bool capped = false;
  std::vector<int> sequence;
  std::unordered_set<std::pair<int, Mask>, MaskHash> visited;

  bool covered_all(const Mask& m) const { return m == full; }

  bool dfs(int last, Mask covered) {
    if (covered_all(covered)) return true;
    if (sequence.size() >= caps.max_steps) {
      if (!successors[last].empty()) capped = true;  // depth cap pruned live branches
      return false;
    }
    if (!visited.emplace(last, covered).second) return false;
    if (++nodes > caps.node_cap) {
      capped = true;
      return false;
    }
    for (int next : successors[last]) {
      Mask grown = covered;
      for (std::size_t w = 0; w < grown.size(); ++w) grown[w] |= coverage[next][w];
      sequence.push_back(next);
      if (dfs(next, std::move(grown))) return true;
      sequence.pop_back();
      if (capped && nodes > caps.node_cap) return false;
    }
    return false;
  }
};

}  // namespace

StaircaseDecision is_step_staircase(const PointSet& s, StaircaseCaps caps) {
  if (s.dim() != 3) throw invalid_input("staircase decision on a non-3D set");
  if (s.size() <= 1) throw invalid_input("staircase decision needs more than one point");

  // staircases are poly-antimatroids closed under intersection; anything else
  // is a definite no
  if (!is_poset_poly_antimatroid(s)) return StaircaseDecision{StaircaseVerdict::no, std::nullopt};

  std::vector<Cuboid> cuboids = maximal_subcuboids(s);
  if (cuboids.size() > caps.max_cuboids)
    return StaircaseDecision{StaircaseVerdict::indeterminate, std::nullopt};

  const auto& pts = s.points();
  std::unordered_map<std::uint64_t, std::size_t, detail::KeyHash> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i].key()] = i;

  std::size_t words = (pts.size() + 63) / 64;
  std::vector<Mask> coverage(cuboids.size(), Mask(words, 0));
  for (std::size_t c = 0; c < cuboids.size(); ++c)
    for (const Point& p : cuboids[c].points()) {
      std::size_t i = index.at(p.key());
      coverage[c][i >> 6] |= 1ull << (i & 63);
    }
  Mask full(words, 0);
  for (std::size_t i = 0; i < pts.size(); ++i) full[i >> 6] |= 1ull << (i & 63);

  auto regular_step = [](const Cuboid& cur, const Cuboid& nxt) {
    return leq_with_strict(cur.min_corner(), nxt.min_corner()) &&
           leq(nxt.min_corner(), cur.max_corner()) &&
           leq_with_strict(cur.max_corner(), nxt.max_corner());
  };
  std::vector<std::vector<int>> successors(cuboids.size());
  for (std::size_t i = 0; i < cuboids.size(); ++i)
    for (std::size_t j = 0; j < cuboids.size(); ++j)
      if (i != j && regular_step(cuboids[i], cuboids[j])) successors[i].push_back(int(j));

  StaircaseSearch search{cuboids, coverage, full, successors, caps, 0, false, {}, {}};
  for (std::size_t c = 0; c < cuboids.size(); ++c) {
    if (!cuboids[c].min_corner().is_origin()) continue;
    search.sequence.assign(1, int(c));
    if (search.dfs(int(c), coverage[c])) {
      StaircaseSpec witness;
      for (int ci : search.sequence) witness.cuboids.push_back(cuboids[ci]);
      return StaircaseDecision{StaircaseVerdict::yes, std::move(witness)};
    }
    if (search.capped && search.nodes > caps.node_cap) break;
  }
  if (search.capped) return StaircaseDecision{StaircaseVerdict::indeterminate, std::nullopt};
  return StaircaseDecision{StaircaseVerdict::no, std::nullopt};
}

StaircaseSpec random_regular_spec(std::uint64_t seed, int max_steps, int max_coord) {
  if (max_steps < 1 || max_coord < 1)
    throw invalid_input("random spec needs max_steps >= 1 and max_coord >= 1");
  SplitMix64 rng(seed);

  auto draw_corner = [&](const std::array<int, 3>& lo, const std::array<int, 3>& hi) {
    std::array<int, 3> c;
    for (int i = 0; i < 3; ++i) c[i] = lo[i] + int(rng.below(std::uint64_t(hi[i] - lo[i]) + 1));
    return c;
  };

  std::array<int, 3> cur_min{0, 0, 0};
  std::array<int, 3> cap{max_coord, max_coord, max_coord};
  std::array<int, 3> cur_max = draw_corner({0, 0, 0}, cap);
  while (cur_max == std::array<int, 3>{0, 0, 0}) cur_max = draw_corner({0, 0, 0}, cap);

  StaircaseSpec spec;
  spec.cuboids.emplace_back(Point(0, 0, 0), Point(cur_max[0], cur_max[1], cur_max[2]));

  int steps = 1 + int(rng.below(std::uint64_t(max_steps)));
  while (int(spec.cuboids.size()) < steps) {
    if (cur_max == cap) break;  // max corner saturated; no strict growth left
    std::array<int, 3> next_min = draw_corner(cur_min, cur_max);
    if (next_min == cur_min) {
      // force the strict coordinate of condition (b)
      std::vector<int> open;
      for (int i = 0; i < 3; ++i)
        if (cur_min[i] < cur_max[i]) open.push_back(i);
      int ax = open[rng.below(open.size())];
      next_min[ax] = cur_min[ax] + 1 + int(rng.below(std::uint64_t(cur_max[ax] - cur_min[ax])));
    }
    std::array<int, 3> next_max = draw_corner(cur_max, cap);
    if (next_max == cur_max) {
      std::vector<int> open;
      for (int i = 0; i < 3; ++i)
        if (cur_max[i] < cap[i]) open.push_back(i);
      int ax = open[rng.below(open.size())];
      next_max[ax] = cur_max[ax] + 1 + int(rng.below(std::uint64_t(cap[ax] - cur_max[ax])));
    }
    spec.cuboids.emplace_back(Point(next_min[0], next_min[1], next_min[2]),
                              Point(next_max[0], next_max[1], next_max[2]));
    cur_min = next_min;
    cur_max = next_max;
  }
  return spec;
}

}  // namespace polyanti::staircase
