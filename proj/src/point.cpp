#include "polyanti/point.hpp"

#include <algorithm>
#include <cstdio>

namespace polyanti {

namespace {

void check_coord(int v) {
  if (v < 0) throw invalid_input("coordinate must be non-negative, got " + std::to_string(v));
  if (v > kMaxCoord) throw invalid_input("coordinate exceeds cap " + std::to_string(kMaxCoord));
}

void check_same_dim(const Point& a, const Point& b) {
  if (a.dim() != b.dim())
    throw invalid_input("dimension mismatch: " + a.str() + " vs " + b.str());
}

// grid volume above which PointSet skips the bit table
constexpr std::uint64_t kGridVolumeCap = 4096;

}  // namespace

Point::Point(int x, int y) : dim_(2) {
  check_coord(x);
  check_coord(y);
  c_ = {std::uint16_t(x), std::uint16_t(y), 0};
}

Point::Point(int x, int y, int z) : dim_(3) {
  check_coord(x);
  check_coord(y);
  check_coord(z);
  c_ = {std::uint16_t(x), std::uint16_t(y), std::uint16_t(z)};
}

Point Point::origin(int dim) {
  if (dim == 2) return Point(0, 0);
  if (dim == 3) return Point(0, 0, 0);
  throw invalid_input("dimension must be 2 or 3, got " + std::to_string(dim));
}

Point Point::of(std::span<const int> coords) {
  if (coords.size() == 2) return Point(coords[0], coords[1]);
  if (coords.size() == 3) return Point(coords[0], coords[1], coords[2]);
  throw invalid_input("dimension must be 2 or 3, got " + std::to_string(coords.size()));
}

Point Point::bumped(int axis, int delta) const {
  Point q = *this;
  int v = int(c_[axis]) + delta;
  check_coord(v);
  q.c_[axis] = std::uint16_t(v);
  return q;
}

std::string Point::str() const {
  char buf[32];
  if (dim_ == 2)
    std::snprintf(buf, sizeof buf, "(%d,%d)", int(c_[0]), int(c_[1]));
  else
    std::snprintf(buf, sizeof buf, "(%d,%d,%d)", int(c_[0]), int(c_[1]), int(c_[2]));
  return buf;
}

bool leq(const Point& a, const Point& b) {
  check_same_dim(a, b);
  for (int i = 0; i < a.dim(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Point join(const Point& a, const Point& b) {
  check_same_dim(a, b);
  if (a.dim() == 2) return Point(std::max(a[0], b[0]), std::max(a[1], b[1]));
  return Point(std::max(a[0], b[0]), std::max(a[1], b[1]), std::max(a[2], b[2]));
}

Point meet(const Point& a, const Point& b) {
  check_same_dim(a, b);
  if (a.dim() == 2) return Point(std::min(a[0], b[0]), std::min(a[1], b[1]));
  return Point(std::min(a[0], b[0]), std::min(a[1], b[1]), std::min(a[2], b[2]));
}

bool LexLess::operator()(const Point& a, const Point& b) const noexcept {
  for (int i = 0; i < 3; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return a.dim() < b.dim();
}

PointSet::PointSet(int dim) : dim_(dim) {
  if (dim != 2 && dim != 3)
    throw invalid_input("dimension must be 2 or 3, got " + std::to_string(dim));
}

PointSet::PointSet(int dim, std::span<const Point> pts) : PointSet(dim) {
  for (const Point& p : pts) insert(p);
}

void PointSet::insert(const Point& p) {
  if (p.dim() != dim_)
    throw invalid_input("point " + p.str() + " has dimension " + std::to_string(p.dim()) +
                        ", set has " + std::to_string(dim_));
  if (keys_.insert(p.key()).second) {
    pts_.push_back(p);
    dirty_ = true;
    grid_.clear();
  }
}

void PointSet::finalize() const {
  std::sort(pts_.begin(), pts_.end(), LexLess{});
  if (!pts_.empty()) {
    std::uint64_t vol = 1;
    std::array<int, 3> gs{1, 1, 1};
    for (const Point& p : pts_)
      for (int i = 0; i < 3; ++i) gs[i] = std::max(gs[i], p[i] + 1);
    for (int i = 0; i < 3; ++i) vol *= std::uint64_t(gs[i]);
    if (vol <= kGridVolumeCap) {
      gsize_ = gs;
      grid_.assign((vol + 63) / 64, 0);
      for (const Point& p : pts_) {
        std::uint64_t idx =
            std::uint64_t(p[0]) + std::uint64_t(gs[0]) * (std::uint64_t(p[1]) + std::uint64_t(gs[1]) * p[2]);
        grid_[idx >> 6] |= 1ull << (idx & 63);
      }
    }
  }
  dirty_ = false;
}

bool PointSet::contains_key(std::uint64_t key, int x, int y, int z) const {
  if (!dirty_ && !grid_.empty()) {
    if (x >= gsize_[0] || y >= gsize_[1] || z >= gsize_[2]) return false;
    std::uint64_t idx = std::uint64_t(x) + std::uint64_t(gsize_[0]) * (std::uint64_t(y) + std::uint64_t(gsize_[1]) * z);
    return (grid_[idx >> 6] >> (idx & 63)) & 1;
  }
  return keys_.count(key) != 0;
}

bool PointSet::contains(const Point& p) const {
  if (p.dim() != dim_)
    throw invalid_input("membership query " + p.str() + " in a " + std::to_string(dim_) +
                        "-dimensional set");
  return contains_key(p.key(), p[0], p[1], p[2]);
}

bool PointSet::contains_coords(int x, int y) const {
  if (x < 0 || y < 0 || x > kMaxCoord || y > kMaxCoord) return false;
  std::uint64_t key = std::uint64_t(x) | std::uint64_t(y) << 16 | std::uint64_t(2) << 48;
  return contains_key(key, x, y, 0);
}

bool PointSet::contains_coords(int x, int y, int z) const {
  if (x < 0 || y < 0 || z < 0 || x > kMaxCoord || y > kMaxCoord || z > kMaxCoord) return false;
  std::uint64_t key = std::uint64_t(x) | std::uint64_t(y) << 16 | std::uint64_t(z) << 32 |
                      std::uint64_t(3) << 48;
  return contains_key(key, x, y, z);
}

const std::vector<Point>& PointSet::points() const {
  if (dirty_) finalize();
  return pts_;
}

Point PointSet::max_point() const {
  if (pts_.empty()) throw invalid_input("max_point of an empty point set");
  Point m = pts_.front();
  for (const Point& p : pts_) m = join(m, p);
  return m;
}

bool PointSet::operator==(const PointSet& other) const {
  if (dim_ != other.dim_ || pts_.size() != other.pts_.size()) return false;
  return points() == other.points();
}

Chain::Chain(std::vector<Point> ascending_points) : pts_(std::move(ascending_points)) {
  if (pts_.empty()) throw invalid_input("chain must be non-empty");
  if (!pts_.front().is_origin())
    throw invalid_input("chain must start at the origin, starts at " + pts_.front().str());
  for (std::size_t i = 1; i < pts_.size(); ++i) {
    const Point& a = pts_[i - 1];
    const Point& b = pts_[i];
    if (a.dim() != b.dim()) throw invalid_input("chain mixes dimensions");
    int increments = 0;
    bool unit = true;
    for (int ax = 0; ax < a.dim(); ++ax) {
      int d = b[ax] - a[ax];
      if (d == 1)
        ++increments;
      else if (d != 0)
        unit = false;
    }
    if (!unit || increments != 1)
      throw invalid_input("chain step " + a.str() + " -> " + b.str() + " is not a unit increment");
  }
}

PointSet Chain::as_point_set() const {
  PointSet s(dim());
  for (const Point& p : pts_) s.insert(p);
  return s;
}

PointSet join_of_chains(std::span<const Chain> chains) {
  if (chains.empty()) throw invalid_input("join_of_chains needs at least one chain");
  int d = chains.front().dim();
  for (const Chain& c : chains)
    if (c.dim() != d) throw invalid_input("join_of_chains over mixed dimensions");

  std::vector<Point> current = chains.front().points();
  for (std::size_t ci = 1; ci < chains.size(); ++ci) {
    PointSet folded(d);
    for (const Point& a : current)
      for (const Point& b : chains[ci].points()) folded.insert(join(a, b));
    current = folded.points();
  }
  return PointSet(d, current);
}

}  // namespace polyanti
