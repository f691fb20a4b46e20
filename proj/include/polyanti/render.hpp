#pragma once

#include <string>

#include "polyanti/point.hpp"

namespace polyanti::render {

struct Overlays {
  bool boundaries = false;  // 2D: mark lower/upper boundary membership
  bool chains = false;      // 2D: traced boundaries; 3D: the three axis-order traces
};

// Character grid, one row per y value, top row y_max: '.' absent cell, 'o'
// member, 'L'/'U'/'B' lower/upper/both boundary membership. 3D sets render
// one grid per z slice. Chain overlays in 3D mark members of the traced
// chains ('X'/'Y'/'Z', '*' when on several).
std::string ascii(const PointSet& s, const Overlays& overlays = {});

// Minimal static SVG: unit squares per member plus polyline chain overlays;
// 3D sets render three axis-projection panels. No external assets.
std::string svg(const PointSet& s, const Overlays& overlays = {});

}  // namespace polyanti::render
