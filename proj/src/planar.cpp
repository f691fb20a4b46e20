#include "polyanti/planar.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_set>

#include "polyanti/rng.hpp"

namespace polyanti::planar {

namespace {

void require_2d(const PointSet& s) {
  if (s.dim() != 2) throw invalid_input("operation requires a 2-dimensional set");
  if (s.empty()) throw invalid_input("operation requires a non-empty set");
}

void require_2d_point(const Point& p) {
  if (p.dim() != 2) throw invalid_input("operation requires a 2-dimensional point");
}

std::vector<Point> clipped(const Point& p, std::initializer_list<std::pair<int, int>> deltas) {
  std::vector<Point> out;
  for (auto [dx, dy] : deltas) {
    int x = p[0] + dx, y = p[1] + dy;
    if (x >= 0 && y >= 0 && x <= kMaxCoord && y <= kMaxCoord) out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

// uniform monotone lattice path from (0,0) to (w,h); one rng draw per step
Chain sample_monotone_path(SplitMix64& rng, int w, int h) {
  std::vector<Point> pts;
  pts.reserve(std::size_t(w) + h + 1);
  int x = 0, y = 0;
  pts.emplace_back(0, 0);
  while (x < w || y < h) {
    std::uint64_t rx = std::uint64_t(w - x), ry = std::uint64_t(h - y);
    if (rng.below(rx + ry) < rx)
      ++x;
    else
      ++y;
    pts.emplace_back(x, y);
  }
  return Chain(std::move(pts));
}

}  // namespace

std::vector<Point> n4_neighborhood(const Point& p) {
  require_2d_point(p);
  return clipped(p, {{-1, 0}, {0, -1}, {1, 0}, {0, 1}});
}

std::vector<Point> n8_neighborhood(const Point& p) {
  require_2d_point(p);
  return clipped(p, {{-1, 0}, {0, -1}, {1, 0}, {0, 1}, {-1, -1}, {-1, 1}, {1, -1}, {1, 1}});
}

bool is_n4_connected(const PointSet& s) {
  require_2d(s);
  std::unordered_set<std::uint64_t, detail::KeyHash> seen;
  std::deque<Point> queue{s.points().front()};
  seen.insert(queue.front().key());
  while (!queue.empty()) {
    Point p = queue.front();
    queue.pop_front();
    for (auto [dx, dy] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
      int x = p[0] + dx, y = p[1] + dy;
      if (!s.contains_coords(x, y)) continue;
      Point q(x, y);
      if (seen.insert(q.key()).second) queue.push_back(q);
    }
  }
  return seen.size() == s.size();
}

bool is_orthogonally_convex(const PointSet& s) {
  require_2d(s);
  struct Extent {
    int lo, hi, count;
  };
  std::map<int, Extent> rows, cols;
  auto grow = [](std::map<int, Extent>& m, int key, int v) {
    auto [it, fresh] = m.try_emplace(key, Extent{v, v, 1});
    if (!fresh) {
      it->second.lo = std::min(it->second.lo, v);
      it->second.hi = std::max(it->second.hi, v);
      ++it->second.count;
    }
  };
  for (const Point& p : s.points()) {
    grow(rows, p[1], p[0]);
    grow(cols, p[0], p[1]);
  }
  for (const auto& m : {rows, cols})
    for (const auto& [key, e] : m)
      if (e.hi - e.lo + 1 != e.count) return false;
  return true;
}

BoundarySets boundary_point_sets(const PointSet& s) {
  require_2d(s);
  BoundarySets out{PointSet(2), PointSet(2)};
  for (const Point& p : s.points()) {
    int x = p[0], y = p[1];
    if (!s.contains_coords(x + 1, y) || !s.contains_coords(x, y - 1) ||
        !s.contains_coords(x + 1, y - 1))
      out.lower.insert(p);
    if (!s.contains_coords(x - 1, y) || !s.contains_coords(x, y + 1) ||
        !s.contains_coords(x - 1, y + 1))
      out.upper.insert(p);
  }
  return out;
}

Chain trace_upper_boundary(const PointSet& s) {
  require_2d(s);
  static constexpr int order[2] = {0, 1};
  return polyanti::detail::trace_descending(s, order, s.max_point());
}

Chain trace_lower_boundary(const PointSet& s) {
  require_2d(s);
  static constexpr int order[2] = {1, 0};
  return polyanti::detail::trace_descending(s, order, s.max_point());
}

BoundaryDecomposition decompose_boundary(const PointSet& s) {
  return BoundaryDecomposition{trace_lower_boundary(s), trace_upper_boundary(s)};
}

std::optional<Violation> check_antimatroidal_2d(const PointSet& s) {
  require_2d(s);
  const auto& pts = s.points();
  for (const Point& p : pts) {
    if (p.is_origin()) continue;
    if (!s.contains_coords(p[0] - 1, p[1]) && !s.contains_coords(p[0], p[1] - 1))
      return Violation{"A1", p.str() + " has no feasible decrement"};
  }
  for (const Point& a : pts)
    for (const Point& b : pts) {
      if (leq(a, b)) continue;
      int xb = b[0], yb = b[1];
      bool right = s.contains_coords(xb + 1, yb);
      bool up = s.contains_coords(xb, yb + 1);
      if (a[0] >= xb && a[1] >= yb && !right && !up)
        return Violation{"A2-case1", "A=" + a.str() + ", B=" + b.str() + ": neither (" +
                                         std::to_string(xb + 1) + "," + std::to_string(yb) +
                                         ") nor (" + std::to_string(xb) + "," +
                                         std::to_string(yb + 1) + ") is a member"};
      if (a[0] <= xb && a[1] >= yb && !up)
        return Violation{"A2-case2", "A=" + a.str() + ", B=" + b.str() + ": (" +
                                         std::to_string(xb) + "," + std::to_string(yb + 1) +
                                         ") is missing"};
      if (a[0] >= xb && a[1] <= yb && !right)
        return Violation{"A2-case3", "A=" + a.str() + ", B=" + b.str() + ": (" +
                                         std::to_string(xb + 1) + "," + std::to_string(yb) +
                                         ") is missing"};
    }
  return std::nullopt;
}

namespace {

// sorted boundary set forms a monotone unit-step path from origin to max?
bool orders_into_path(const PointSet& boundary, const Point& maximum) {
  const auto& pts = boundary.points();  // x-major lex = path order if a path
  if (!pts.front().is_origin() || !(pts.back() == maximum)) return false;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    int dx = pts[i][0] - pts[i - 1][0];
    int dy = pts[i][1] - pts[i - 1][1];
    if (!((dx == 1 && dy == 0) || (dx == 0 && dy == 1))) return false;
  }
  return true;
}

}  // namespace

bool characterization_check(const PointSet& s) {
  require_2d(s);
  if (!is_orthogonally_convex(s) || !is_n4_connected(s)) return false;
  BoundarySets b = boundary_point_sets(s);
  Point m = s.max_point();
  return orders_into_path(b.lower, m) && orders_into_path(b.upper, m);
}

PointSet random_antimatroidal_set(std::uint64_t seed, int width, int height) {
  if (width < 0 || height < 0) throw invalid_input("width and height must be non-negative");
  SplitMix64 rng(seed);
  Chain first = sample_monotone_path(rng, width, height);
  Chain second = sample_monotone_path(rng, width, height);
  const Chain pair[2] = {std::move(first), std::move(second)};
  return join_of_chains(pair);
}

}  // namespace polyanti::planar
