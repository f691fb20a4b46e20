#include "polyanti/axioms.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace polyanti {

namespace {

void require_non_empty(const PointSet& s) {
  if (s.empty()) throw invalid_input("axiom predicates require a non-empty set");
}

bool member_shifted(const PointSet& s, const Point& p, int axis, int delta) {
  int c[3] = {0, 0, 0};
  for (int i = 0; i < p.dim(); ++i) c[i] = p[i];
  c[axis] += delta;
  return s.dim() == 2 ? s.contains_coords(c[0], c[1]) : s.contains_coords(c[0], c[1], c[2]);
}

}  // namespace

std::optional<Violation> check_accessible(const PointSet& s) {
  require_non_empty(s);
  const Point origin = Point::origin(s.dim());
  if (!s.contains(origin))
    return Violation{"A1", "origin " + origin.str() + " is not a member"};
  for (const Point& p : s.points()) {
    if (p.is_origin()) continue;
    bool ok = false;
    for (int ax = 0; ax < s.dim() && !ok; ++ax)
      ok = p[ax] > 0 && member_shifted(s, p, ax, -1);
    if (!ok) return Violation{"A1", p.str() + " has no feasible decrement"};
  }
  return std::nullopt;
}

std::optional<Violation> check_union_closed(const PointSet& s) {
  require_non_empty(s);
  const auto& pts = s.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Point u = join(pts[i], pts[j]);
      if (!s.contains(u))
        return Violation{"union-closure",
                         pts[i].str() + " ∪ " + pts[j].str() + " = " + u.str() + " is missing"};
    }
  return std::nullopt;
}

std::optional<Violation> check_intersection_closed(const PointSet& s) {
  require_non_empty(s);
  const auto& pts = s.points();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      Point m = meet(pts[i], pts[j]);
      if (!s.contains(m))
        return Violation{"intersection-closure",
                         pts[i].str() + " ∩ " + pts[j].str() + " = " + m.str() + " is missing"};
    }
  return std::nullopt;
}

std::optional<Violation> check_exchange_strict(const PointSet& s) {
  require_non_empty(s);
  const auto& pts = s.points();
  for (const Point& a : pts)
    for (const Point& b : pts) {
      if (leq(a, b)) continue;
      bool ok = false;
      for (int ax = 0; ax < s.dim() && !ok; ++ax)
        ok = a[ax] > b[ax] && member_shifted(s, b, ax, +1);
      if (!ok)
        return Violation{"A2", "no feasible exchange from A=" + a.str() + " into B=" + b.str()};
    }
  return std::nullopt;
}

std::optional<Violation> check_chain_property(const PointSet& s) {
  require_non_empty(s);
  const auto& pts = s.points();
  std::unordered_set<std::uint64_t, detail::KeyHash> reach;
  std::deque<Point> queue;
  for (const Point& a : pts) {
    // one upward flood per source covers every nested partner
    reach.clear();
    queue.clear();
    reach.insert(a.key());
    queue.push_back(a);
    while (!queue.empty()) {
      Point p = queue.front();
      queue.pop_front();
      for (int ax = 0; ax < s.dim(); ++ax) {
        if (p[ax] >= kMaxCoord || !member_shifted(s, p, ax, +1)) continue;
        Point q = p.bumped(ax, +1);
        if (reach.insert(q.key()).second) queue.push_back(q);
      }
    }
    for (const Point& b : pts)
      if (strictly_less(a, b) && !reach.count(b.key()))
        return Violation{"chain-property",
                         "no unit-step monotone path from " + a.str() + " to " + b.str()};
  }
  return std::nullopt;
}

std::optional<Violation> check_poly_antimatroid(const PointSet& s) {
  if (auto v = check_accessible(s)) return v;
  return check_union_closed(s);
}

namespace detail {

Chain trace_descending(const PointSet& s, std::span<const int> axis_priority,
                       const Point& start) {
  if (!s.contains(start))
    throw invalid_input("trace start " + start.str() + " is not a member");
  std::vector<Point> path{start};
  Point cur = start;
  while (!cur.is_origin()) {
    bool stepped = false;
    for (int ax : axis_priority) {
      if (cur[ax] > 0 && member_shifted(s, cur, ax, -1)) {
        cur = cur.bumped(ax, -1);
        path.push_back(cur);
        stepped = true;
        break;
      }
    }
    if (!stepped)
      throw invalid_input("trace stuck at " + cur.str() +
                          ": no feasible decrement (set is not antimatroidal)");
  }
  std::reverse(path.begin(), path.end());
  return Chain(std::move(path));
}

}  // namespace detail

}  // namespace polyanti
