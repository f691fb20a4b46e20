#include "polyanti/render.hpp"

#include <algorithm>
#include <sstream>

#include "polyanti/planar.hpp"
#include "polyanti/staircase.hpp"

namespace polyanti::render {

namespace {

std::string ascii_2d(const PointSet& s, const Overlays& overlays) {
  Point m = s.max_point();
  bool marked = overlays.boundaries || overlays.chains;
  PointSet lower(2), upper(2);
  if (marked) {
    if (overlays.chains) {
      lower = planar::trace_lower_boundary(s).as_point_set();
      upper = planar::trace_upper_boundary(s).as_point_set();
    } else {
      planar::BoundarySets b = planar::boundary_point_sets(s);
      lower = std::move(b.lower);
      upper = std::move(b.upper);
    }
  }
  std::ostringstream out;
  for (int y = m[1]; y >= 0; --y) {
    for (int x = 0; x <= m[0]; ++x) {
      char cell = '.';
      if (s.contains_coords(x, y)) {
        cell = 'o';
        if (marked) {
          bool lo = lower.contains_coords(x, y);
          bool up = upper.contains_coords(x, y);
          if (lo && up)
            cell = 'B';
          else if (lo)
            cell = 'L';
          else if (up)
            cell = 'U';
        }
      }
      out << cell;
    }
    out << '\n';
  }
  return out.str();
}

std::string ascii_3d(const PointSet& s, const Overlays& overlays) {
  Point m = s.max_point();
  PointSet cx(3), cy(3), cz(3);
  if (overlays.chains) {
    staircase::ThreeChains t = staircase::three_chain_decomposition(s);
    cx = t.b_x.as_point_set();
    cy = t.b_y.as_point_set();
    cz = t.b_z.as_point_set();
  }
  std::ostringstream out;
  for (int z = m[2]; z >= 0; --z) {
    out << "z=" << z << ":\n";
    for (int y = m[1]; y >= 0; --y) {
      for (int x = 0; x <= m[0]; ++x) {
        char cell = '.';
        if (s.contains_coords(x, y, z)) {
          cell = 'o';
          if (overlays.chains) {
            int hits = cx.contains_coords(x, y, z) + cy.contains_coords(x, y, z) +
                       cz.contains_coords(x, y, z);
            if (hits > 1)
              cell = '*';
            else if (cx.contains_coords(x, y, z))
              cell = 'X';
            else if (cy.contains_coords(x, y, z))
              cell = 'Y';
            else if (cz.contains_coords(x, y, z))
              cell = 'Z';
          }
        }
        out << cell;
      }
      out << '\n';
    }
    if (z > 0) out << '\n';
  }
  return out.str();
}

constexpr int kCell = 16;

void svg_squares(std::ostringstream& out, const std::vector<Point>& pts, int ax, int ay,
                 int y_top, int x_off) {
  for (const Point& p : pts)
    out << "<rect x=\"" << x_off + p[ax] * kCell << "\" y=\"" << (y_top - p[ay]) * kCell
        << "\" width=\"" << kCell << "\" height=\"" << kCell
        << "\" fill=\"#d9d9d9\" stroke=\"#777777\"/>\n";
}

void svg_polyline(std::ostringstream& out, const std::vector<Point>& pts, int ax, int ay,
                  int y_top, int x_off, const char* color) {
  out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out << ' ';
    out << x_off + pts[i][ax] * kCell + kCell / 2 << ','
        << (y_top - pts[i][ay]) * kCell + kCell / 2;
  }
  out << "\"/>\n";
}

std::string svg_2d(const PointSet& s, const Overlays& overlays) {
  Point m = s.max_point();
  int w = (m[0] + 1) * kCell, h = (m[1] + 1) * kCell;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\">\n";
  svg_squares(out, s.points(), 0, 1, m[1], 0);
  if (overlays.boundaries || overlays.chains) {
    svg_polyline(out, planar::trace_lower_boundary(s).points(), 0, 1, m[1], 0, "#c0392b");
    svg_polyline(out, planar::trace_upper_boundary(s).points(), 0, 1, m[1], 0, "#2471a3");
  }
  out << "</svg>\n";
  return out.str();
}

std::string svg_3d(const PointSet& s, const Overlays& overlays) {
  Point m = s.max_point();
  // xy / xz / yz projection panels, left to right
  struct Panel {
    int ax, ay;
    const char* label;
  };
  const Panel panels[3] = {{0, 1, "xy"}, {0, 2, "xz"}, {1, 2, "yz"}};
  int max_side = std::max({m[0], m[1], m[2]}) + 1;
  int panel_w = (max_side + 1) * kCell;
  int h = (max_side + 1) * kCell + kCell;

  std::vector<Chain> chains;
  if (overlays.chains) {
    staircase::ThreeChains t = staircase::three_chain_decomposition(s);
    chains = {t.b_x, t.b_y, t.b_z};
  }
  const char* colors[3] = {"#c0392b", "#1e8449", "#2471a3"};

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << panel_w * 3 << "\" height=\""
      << h << "\">\n";
  for (int i = 0; i < 3; ++i) {
    const Panel& panel = panels[i];
    int x_off = i * panel_w;
    int y_top = m[panel.ay];
    PointSet flat(2);
    for (const Point& p : s.points()) flat.insert(Point(p[panel.ax], p[panel.ay]));
    svg_squares(out, flat.points(), 0, 1, y_top, x_off);
    for (std::size_t c = 0; c < chains.size(); ++c)
      svg_polyline(out, chains[c].points(), panel.ax, panel.ay, y_top, x_off, colors[c]);
    out << "<text x=\"" << x_off << "\" y=\"" << (y_top + 1) * kCell + kCell - 4
        << "\" font-size=\"12\">" << panel.label << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string ascii(const PointSet& s, const Overlays& overlays) {
  if (s.empty()) throw invalid_input("render of an empty set");
  return s.dim() == 2 ? ascii_2d(s, overlays) : ascii_3d(s, overlays);
}

std::string svg(const PointSet& s, const Overlays& overlays) {
  if (s.empty()) throw invalid_input("render of an empty set");
  return s.dim() == 2 ? svg_2d(s, overlays) : svg_3d(s, overlays);
}

}  // namespace polyanti::render
