// Python bindings: point sets travel as lists of integer tuples, chains as
// lists of points, cuboids as (min, max) tuple pairs.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "polyanti/axioms.hpp"
#include "polyanti/cdim.hpp"
#include "polyanti/harness.hpp"
#include "polyanti/planar.hpp"
#include "polyanti/pointfile.hpp"
#include "polyanti/render.hpp"
#include "polyanti/staircase.hpp"

namespace py = pybind11;
using namespace polyanti;

namespace {

using IntRow = std::vector<int>;

Point point_from(const IntRow& row) { return Point::of(row); }

PointSet set_from(const std::vector<IntRow>& rows) {
  if (rows.empty()) throw invalid_input("point list must be non-empty");
  Point first = point_from(rows.front());
  PointSet s(first.dim());
  for (const IntRow& row : rows) s.insert(point_from(row));
  return s;
}

py::tuple point_to(const Point& p) {
  if (p.dim() == 2) return py::make_tuple(p[0], p[1]);
  return py::make_tuple(p[0], p[1], p[2]);
}

py::list points_to(const std::vector<Point>& pts) {
  py::list out;
  for (const Point& p : pts) out.append(point_to(p));
  return out;
}

py::list set_to(const PointSet& s) { return points_to(s.points()); }

Chain chain_from(const std::vector<IntRow>& rows) {
  std::vector<Point> pts;
  pts.reserve(rows.size());
  for (const IntRow& row : rows) pts.push_back(point_from(row));
  return Chain(std::move(pts));
}

py::list chain_to(const Chain& c) { return points_to(c.points()); }

using CuboidPair = std::pair<IntRow, IntRow>;

staircase::StaircaseSpec spec_from(const std::vector<CuboidPair>& cuboids) {
  staircase::StaircaseSpec spec;
  for (const auto& [lo, hi] : cuboids)
    spec.cuboids.emplace_back(point_from(lo), point_from(hi));
  return spec;
}

py::list spec_to(const staircase::StaircaseSpec& spec) {
  py::list out;
  for (const auto& c : spec.cuboids)
    out.append(py::make_tuple(point_to(c.min_corner()), point_to(c.max_corner())));
  return out;
}

std::array<int, 3> order_from(const std::string& order) {
  if (order.size() != 3) throw invalid_input("axis order must be three of x, y, z");
  std::array<int, 3> out{};
  for (int i = 0; i < 3; ++i) {
    char ch = order[i];
    if (ch < 'x' || ch > 'z') throw invalid_input("axis order must use only x, y, z");
    out[i] = ch - 'x';
  }
  return out;
}

const char* verdict_name(staircase::StaircaseVerdict v) {
  switch (v) {
    case staircase::StaircaseVerdict::yes: return "yes";
    case staircase::StaircaseVerdict::no: return "no";
    default: return "indeterminate";
  }
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Geometry of antimatroidal point sets: axiom predicates, boundary tracing, "
            "convex dimension, 3D staircases and conjecture search.";
  m.attr("__version__") = "0.1.0";

  py::register_exception<invalid_input>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<io::parse_error>(m, "ParseError", PyExc_ValueError);

  // point algebra
  m.def("join", [](const IntRow& a, const IntRow& b) {
    return point_to(join(point_from(a), point_from(b)));
  });
  m.def("meet", [](const IntRow& a, const IntRow& b) {
    return point_to(meet(point_from(a), point_from(b)));
  });

  // axiom predicates
  m.def("is_accessible", [](const std::vector<IntRow>& pts) { return is_accessible(set_from(pts)); });
  m.def("is_union_closed",
        [](const std::vector<IntRow>& pts) { return is_union_closed(set_from(pts)); });
  m.def("is_intersection_closed",
        [](const std::vector<IntRow>& pts) { return is_intersection_closed(set_from(pts)); });
  m.def("satisfies_exchange_strict",
        [](const std::vector<IntRow>& pts) { return satisfies_exchange_strict(set_from(pts)); });
  m.def("satisfies_chain_property",
        [](const std::vector<IntRow>& pts) { return satisfies_chain_property(set_from(pts)); });
  m.def("is_poly_antimatroid",
        [](const std::vector<IntRow>& pts) { return is_poly_antimatroid(set_from(pts)); });
  m.def("join_of_chains", [](const std::vector<std::vector<IntRow>>& chains) {
    std::vector<Chain> cs;
    cs.reserve(chains.size());
    for (const auto& rows : chains) cs.push_back(chain_from(rows));
    return set_to(join_of_chains(cs));
  });

  // digital-plane geometry
  m.def("n4_neighborhood",
        [](const IntRow& p) { return points_to(planar::n4_neighborhood(point_from(p))); });
  m.def("n8_neighborhood",
        [](const IntRow& p) { return points_to(planar::n8_neighborhood(point_from(p))); });
  m.def("is_n4_connected",
        [](const std::vector<IntRow>& pts) { return planar::is_n4_connected(set_from(pts)); });
  m.def("is_orthogonally_convex", [](const std::vector<IntRow>& pts) {
    return planar::is_orthogonally_convex(set_from(pts));
  });
  m.def("boundary_point_sets", [](const std::vector<IntRow>& pts) {
    planar::BoundarySets b = planar::boundary_point_sets(set_from(pts));
    return py::make_tuple(set_to(b.lower), set_to(b.upper));
  });
  m.def("trace_lower_boundary", [](const std::vector<IntRow>& pts) {
    return chain_to(planar::trace_lower_boundary(set_from(pts)));
  });
  m.def("trace_upper_boundary", [](const std::vector<IntRow>& pts) {
    return chain_to(planar::trace_upper_boundary(set_from(pts)));
  });
  m.def("is_antimatroidal_2d",
        [](const std::vector<IntRow>& pts) { return planar::is_antimatroidal_2d(set_from(pts)); });
  m.def("characterization_check", [](const std::vector<IntRow>& pts) {
    return planar::characterization_check(set_from(pts));
  });
  m.def(
      "random_antimatroidal_set",
      [](std::uint64_t seed, int width, int height) {
        return set_to(planar::random_antimatroidal_set(seed, width, height));
      },
      py::arg("seed"), py::arg("width"), py::arg("height"));

  // convex dimension
  py::class_<cdim::CdimResult>(m, "CdimResult")
      .def_readonly("lower", &cdim::CdimResult::lower)
      .def_property_readonly("upper",
                             [](const cdim::CdimResult& r) {
                               return r.upper ? py::cast(*r.upper) : py::none().cast<py::object>();
                             })
      .def_readonly("exhausted", &cdim::CdimResult::exhausted)
      .def_property_readonly("exact", &cdim::CdimResult::exact)
      .def_property_readonly("value",
                             [](const cdim::CdimResult& r) {
                               return r.exact() ? py::cast(r.value()) : py::none().cast<py::object>();
                             })
      .def_property_readonly("witnesses",
                             [](const cdim::CdimResult& r) {
                               py::list out;
                               for (const Chain& c : r.witnesses) out.append(chain_to(c));
                               return out;
                             })
      .def_property_readonly("irreducible_antichain",
                             [](const cdim::CdimResult& r) { return set_to(r.irreducible_antichain); })
      .def("__repr__", [](const cdim::CdimResult& r) {
        if (r.exact()) return "CdimResult(exact=" + std::to_string(r.value()) + ")";
        std::string upper = r.upper ? std::to_string(*r.upper) : std::string("?");
        return "CdimResult(lower=" + std::to_string(r.lower) + ", upper=" + upper + ")";
      });

  m.def(
      "enumerate_maximal_chains",
      [](const std::vector<IntRow>& pts, std::size_t cap) {
        cdim::ChainEnumeration e = cdim::enumerate_maximal_chains(set_from(pts), cap);
        py::list chains;
        for (const Chain& c : e.chains) chains.append(chain_to(c));
        return py::make_tuple(chains, e.overflowed);
      },
      py::arg("points"), py::arg("cap") = 10000);
  m.def("join_irreducibles",
        [](const std::vector<IntRow>& pts) { return set_to(cdim::join_irreducibles(set_from(pts))); });
  m.def("max_antichain", [](const std::vector<IntRow>& pts) {
    cdim::AntichainResult r = cdim::max_antichain(set_from(pts));
    return py::make_tuple(r.size, points_to(r.witness));
  });
  m.def("cdim_lower_bound",
        [](const std::vector<IntRow>& pts) { return cdim::cdim_lower_bound(set_from(pts)); });
  m.def(
      "convex_dimension_exact",
      [](const std::vector<IntRow>& pts, std::size_t chain_cap, std::size_t subset_cap) {
        return cdim::convex_dimension_exact(set_from(pts), cdim::SearchCaps{chain_cap, subset_cap});
      },
      py::arg("points"), py::arg("chain_cap") = 10000, py::arg("subset_cap") = 2000000);
  m.def("cdim_2d", [](const std::vector<IntRow>& pts) { return cdim::cdim_2d(set_from(pts)); });

  // staircases
  m.def("validate_regular", [](const std::vector<CuboidPair>& cuboids) {
    staircase::RegularityReport r = staircase::validate_regular(spec_from(cuboids));
    py::list violations;
    for (const auto& v : r.violations)
      violations.append("condition " + std::string(1, v.condition) + " at step " +
                        std::to_string(v.index) + ": " + v.detail);
    return py::make_tuple(r.ok, violations);
  });
  m.def("staircase_points", [](const std::vector<CuboidPair>& cuboids) {
    return set_to(staircase::staircase_points(spec_from(cuboids)));
  });
  m.def(
      "random_regular_spec",
      [](std::uint64_t seed, int max_steps, int max_coord) {
        return spec_to(staircase::random_regular_spec(seed, max_steps, max_coord));
      },
      py::arg("seed"), py::arg("max_steps") = 3, py::arg("max_coord") = 6);
  m.def(
      "trace_chain_3d",
      [](const std::vector<IntRow>& pts, const std::string& order, const IntRow& start) {
        return chain_to(staircase::trace_chain_3d(set_from(pts), order_from(order), point_from(start)));
      },
      py::arg("points"), py::arg("order") = "xyz", py::arg("start"));
  m.def("three_chain_decomposition", [](const std::vector<IntRow>& pts) {
    staircase::ThreeChains t = staircase::three_chain_decomposition(set_from(pts));
    return py::make_tuple(chain_to(t.b_x), chain_to(t.b_y), chain_to(t.b_z));
  });
  m.def("verify_staircase_join", [](const std::vector<IntRow>& pts) {
    return staircase::verify_staircase_join(set_from(pts));
  });
  m.def("eppstein_set", [](int n) { return set_to(staircase::eppstein_set(n)); }, py::arg("n"));
  m.def("is_poset_poly_antimatroid", [](const std::vector<IntRow>& pts) {
    return staircase::is_poset_poly_antimatroid(set_from(pts));
  });

  py::class_<staircase::StaircaseDecision>(m, "StaircaseDecision")
      .def_property_readonly("verdict",
                             [](const staircase::StaircaseDecision& d) {
                               return std::string(verdict_name(d.verdict));
                             })
      .def_property_readonly("witness",
                             [](const staircase::StaircaseDecision& d) {
                               return d.witness ? py::object(spec_to(*d.witness))
                                                : py::none().cast<py::object>();
                             })
      .def("__repr__", [](const staircase::StaircaseDecision& d) {
        return "StaircaseDecision(" + std::string(verdict_name(d.verdict)) + ")";
      });

  m.def(
      "is_step_staircase",
      [](const std::vector<IntRow>& pts, std::size_t max_cuboids, std::size_t max_steps,
         std::size_t node_cap) {
        return staircase::is_step_staircase(set_from(pts),
                                            staircase::StaircaseCaps{max_cuboids, max_steps, node_cap});
      },
      py::arg("points"), py::arg("max_cuboids") = 64, py::arg("max_steps") = 8,
      py::arg("node_cap") = std::size_t(1) << 22);

  // conjecture harness
  m.def(
      "enumerate_poly_antimatroids",
      [](const IntRow& box, bool require_intersection_closed) {
        py::list out;
        harness::enumerate_poly_antimatroids(point_from(box), require_intersection_closed,
                                             [&](const PointSet& s) { out.append(set_to(s)); });
        return out;
      },
      py::arg("box"), py::arg("require_intersection_closed") = false);
  m.def(
      "sample_poly_antimatroid",
      [](const IntRow& box, std::uint64_t seed, bool require_intersection_closed,
         std::size_t growth_steps) {
        return set_to(harness::sample_poly_antimatroid(point_from(box), seed,
                                                       require_intersection_closed, growth_steps));
      },
      py::arg("box"), py::arg("seed"), py::arg("require_intersection_closed") = false,
      py::arg("growth_steps") = 16);
  m.def(
      "conjecture_staircase",
      [](const IntRow& box, int workers) {
        return harness::serialize_report(harness::test_conjecture_staircase(point_from(box), workers));
      },
      py::arg("box"), py::arg("workers") = 1);
  m.def(
      "conjecture_cdim",
      [](const IntRow& box, int bound, int workers) {
        return harness::serialize_report(harness::test_cdim_bound(point_from(box), bound, workers));
      },
      py::arg("box"), py::arg("bound") = 3, py::arg("workers") = 1);

  // files and rendering
  m.def("parse_point_file",
        [](const std::string& text) { return set_to(io::parse_point_file_text(text)); });
  m.def("format_point_file",
        [](const std::vector<IntRow>& pts) { return io::format_point_file(set_from(pts)); });
  m.def(
      "render_ascii",
      [](const std::vector<IntRow>& pts, bool boundaries, bool chains) {
        return render::ascii(set_from(pts), render::Overlays{boundaries, chains});
      },
      py::arg("points"), py::arg("boundaries") = false, py::arg("chains") = false);
  m.def(
      "render_svg",
      [](const std::vector<IntRow>& pts, bool boundaries, bool chains) {
        return render::svg(set_from(pts), render::Overlays{boundaries, chains});
      },
      py::arg("points"), py::arg("boundaries") = false, py::arg("chains") = false);
}
