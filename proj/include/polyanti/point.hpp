#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace polyanti {

// Implementation-wide coordinate cap; keeps a point packable into one 64-bit
// key. All instances handled here are desk scale.
inline constexpr int kMaxCoord = 65535;

// Inputs breaking a documented precondition: dimension mismatch, empty set
// handed to an axiom predicate, malformed chain, trace stuck outside the set.
class invalid_input : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A lattice point of dimension 2 or 3. Coordinate i is the multiplicity of
// ground element i, hence non-negative.
class Point {
 public:
  Point(int x, int y);
  Point(int x, int y, int z);

  static Point origin(int dim);
  static Point of(std::span<const int> coords);

  int dim() const noexcept { return dim_; }
  int operator[](int axis) const noexcept { return c_[axis]; }
  bool is_origin() const noexcept { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
  int coord_sum() const noexcept { return int(c_[0]) + int(c_[1]) + int(c_[2]); }

  // Copy with coordinate `axis` shifted by `delta`; validates the result.
  Point bumped(int axis, int delta) const;

  // 16 bits per coordinate plus a dimension tag.
  std::uint64_t key() const noexcept {
    return std::uint64_t(c_[0]) | std::uint64_t(c_[1]) << 16 |
           std::uint64_t(c_[2]) << 32 | std::uint64_t(dim_) << 48;
  }

  std::string str() const;  // "(x,y)" / "(x,y,z)"

  friend bool operator==(const Point& a, const Point& b) noexcept = default;

 private:
  Point() = default;
  std::array<std::uint16_t, 3> c_{0, 0, 0};
  std::uint8_t dim_ = 2;
};

// Componentwise (dominance) order.
bool leq(const Point& a, const Point& b);
inline bool strictly_less(const Point& a, const Point& b) { return leq(a, b) && !(a == b); }
inline bool comparable(const Point& a, const Point& b) { return leq(a, b) || leq(b, a); }

// Multiset union / intersection: componentwise max / min. Throws on
// dimension mismatch.
Point join(const Point& a, const Point& b);
Point meet(const Point& a, const Point& b);

// x-major lexicographic order. On comparable points this agrees with the
// dominance order, so a sorted chain comes out in path order.
struct LexLess {
  bool operator()(const Point& a, const Point& b) const noexcept;
};

namespace detail {
struct KeyHash {
  std::size_t operator()(std::uint64_t k) const noexcept {
    k ^= k >> 30;
    k *= 0xBF58476D1CE4E5B9ull;
    k ^= k >> 27;
    k *= 0x94D049BB133111EBull;
    return static_cast<std::size_t>(k ^ (k >> 31));
  }
};
}  // namespace detail

// A finite set of distinct points of common dimension. Membership lives in a
// hash index; on the first read after mutation the set finalizes: points are
// sorted, and when the bounding box is small a bit table is built for the
// membership-heavy predicates. Build single-threaded, then share freely.
class PointSet {
 public:
  explicit PointSet(int dim);
  PointSet(int dim, std::span<const Point> pts);

  void insert(const Point& p);

  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return pts_.size(); }
  bool empty() const noexcept { return pts_.empty(); }

  bool contains(const Point& p) const;
  // Raw-coordinate membership; negative or over-cap coordinates are absent.
  bool contains_coords(int x, int y) const;
  bool contains_coords(int x, int y, int z) const;

  // Members in x-major lexicographic order.
  const std::vector<Point>& points() const;

  // Componentwise join of all members (whether or not it is a member).
  Point max_point() const;

  bool operator==(const PointSet& other) const;
  bool operator!=(const PointSet& other) const { return !(*this == other); }

 private:
  void finalize() const;
  bool contains_key(std::uint64_t key, int x, int y, int z) const;

  int dim_;
  mutable bool dirty_ = false;
  mutable std::vector<Point> pts_;
  std::unordered_set<std::uint64_t, detail::KeyHash> keys_;
  // bit table over [0..box], built when the box volume is small
  mutable std::vector<std::uint64_t> grid_;
  mutable std::array<int, 3> gsize_{0, 0, 0};
};

// Monotone unit-step lattice path starting at the origin. The constructor
// validates the step structure.
class Chain {
 public:
  explicit Chain(std::vector<Point> ascending_points);

  int dim() const noexcept { return pts_.front().dim(); }
  std::size_t size() const noexcept { return pts_.size(); }      // points
  std::size_t length() const noexcept { return pts_.size() - 1; }  // steps
  const std::vector<Point>& points() const noexcept { return pts_; }
  const Point& front() const noexcept { return pts_.front(); }
  const Point& back() const noexcept { return pts_.back(); }

  PointSet as_point_set() const;

 private:
  std::vector<Point> pts_;
};

// All joins picking one point from each chain. Result is the join (∨) of the
// chains as feasible-set families.
PointSet join_of_chains(std::span<const Chain> chains);

}  // namespace polyanti
