#pragma once

#include <optional>
#include <span>
#include <string>

#include "polyanti/point.hpp"

namespace polyanti {

// First failure found by a predicate, with a human-readable diagnostic.
// Predicates scan points in sorted order, so the reported violation is
// deterministic.
struct Violation {
  std::string rule;
  std::string message;
};

// A1: origin is a member and every other member has a feasible coordinate
// decrement.
std::optional<Violation> check_accessible(const PointSet& s);

// Closure under componentwise max over all member pairs.
std::optional<Violation> check_union_closed(const PointSet& s);

// Closure under componentwise min over all member pairs.
std::optional<Violation> check_intersection_closed(const PointSet& s);

// A2 in strict multiset form: for A ⊀ B there is a coordinate where A
// exceeds B whose increment of B stays in the set.
std::optional<Violation> check_exchange_strict(const PointSet& s);

// Every nested pair A ⊂ B is linked by a unit-step monotone path inside the
// set.
std::optional<Violation> check_chain_property(const PointSet& s);

// Accessible and union-closed.
std::optional<Violation> check_poly_antimatroid(const PointSet& s);

inline bool is_accessible(const PointSet& s) { return !check_accessible(s); }
inline bool is_union_closed(const PointSet& s) { return !check_union_closed(s); }
inline bool is_intersection_closed(const PointSet& s) { return !check_intersection_closed(s); }
inline bool satisfies_exchange_strict(const PointSet& s) { return !check_exchange_strict(s); }
inline bool satisfies_chain_property(const PointSet& s) { return !check_chain_property(s); }
inline bool is_poly_antimatroid(const PointSet& s) { return !check_poly_antimatroid(s); }

namespace detail {
// Greedy chain extraction shared by the 2D boundary traces and the 3D
// tracing algorithm: from `start`, repeatedly take the first axis in
// `axis_priority` whose unit decrement stays in `s`, until the origin.
// Returns the path ascending. Throws invalid_input with the stuck position
// when `s` is not accessible along the way.
Chain trace_descending(const PointSet& s, std::span<const int> axis_priority,
                       const Point& start);
}  // namespace detail

}  // namespace polyanti
