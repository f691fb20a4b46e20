#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "helpers.hpp"
#include "polyanti/pointfile.hpp"
#include "polyanti/render.hpp"
#include "polyanti/report.hpp"

using namespace polyanti;
using namespace polyanti::io;
using namespace testutil;

TEST_CASE("point file parsing") {
  PointSet s = parse_point_file_text("# comment\n\ndim 2\n0 0\n 1 0 \n# more\n1 1\n");
  CHECK(s == ps2({{0, 0}, {1, 0}, {1, 1}}));

  PointSet t = parse_point_file_text("dim 3\n0 0 0\n2 1 0\n");
  CHECK(t.dim() == 3);
  CHECK(t.size() == 2);
}

TEST_CASE("point file parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      parse_point_file_text(text);
    } catch (const parse_error& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("dim 2\n1 2 x\n") == 2);       // malformed token
  CHECK(line_of("dim 2\n1 x\n") == 2);         // bad token
  CHECK(line_of("dim 2\n1 2 3\n") == 2);       // wrong arity
  CHECK(line_of("dim 2\n1\n") == 2);           // wrong arity
  CHECK(line_of("dim 2\n-1 0\n") == 2);        // negative
  CHECK(line_of("dim 4\n") == 1);              // bad dimension
  CHECK(line_of("0 0\n") == 1);                // missing header
  CHECK(line_of("") == 1);                     // empty file
  CHECK(line_of("dim 2\n0 0\n0 0\n") == 3);    // duplicate point
  CHECK(line_of("dim 2\n0 70000\n") == 2);     // over the cap
}

TEST_CASE("bad token with correct arity is still rejected") {
  CHECK_THROWS_AS(parse_point_file_text("dim 3\n1 2 x\n"), parse_error);
}

TEST_CASE("canonical writer round trip") {
  PointSet s = sample34();
  PointSet back = parse_point_file_text(format_point_file(s));
  CHECK(back == s);
  CHECK(format_point_file(back) == format_point_file(s));
}

TEST_CASE("report writer and parser round trip") {
  Report r;
  r.add("command", "verify");
  r.add("points", 34LL);
  r.add("holds", true);
  r.add_section("input", {"0 0", "1 0"});
  r.add("after", "section");

  Report back = Report::parse(r.str());
  CHECK(back.str() == r.str());
  REQUIRE(back.find("points"));
  CHECK(*back.find("points") == "34");
  REQUIRE(back.find_section("input"));
  CHECK(back.find_section("input")->size() == 2);
  CHECK(back.find("missing") == nullptr);

  CHECK_THROWS_AS(Report::parse("  stray indent\n"), parse_error);
  CHECK_THROWS_AS(Report::parse("no colon here\n"), parse_error);
}

TEST_CASE("point tokens") {
  CHECK(format_point_token(p2(3, 4)) == "3,4");
  CHECK(format_point_token(p3(1, 2, 3)) == "1,2,3");
  CHECK(parse_point_token("3,4") == p2(3, 4));
  CHECK(parse_point_token("1,2,3") == p3(1, 2, 3));
  CHECK_THROWS_AS(parse_point_token("1"), invalid_input);
  CHECK_THROWS_AS(parse_point_token("1,a"), invalid_input);
  CHECK(parse_point_sequence("0,0 1,0 1,1").size() == 3);
}

TEST_CASE("input sections replay through the point file grammar") {
  PointSet s = sample34();
  PointSet back = point_set_from_lines(2, point_set_lines(s));
  CHECK(back == s);
}

TEST_CASE("ascii rendering of the 34-point sample") {
  PointSet s = sample34();
  std::string plain = render::ascii(s);
  // 7 rows of 13 cells, top row {9..12} occupied
  std::vector<std::string> rows;
  std::istringstream in(plain);
  for (std::string line; std::getline(in, line);) rows.push_back(line);
  REQUIRE(rows.size() == 7);
  for (const auto& row : rows) CHECK(row.size() == 13);
  CHECK(rows[0] == ".........oooo");
  CHECK(rows[6] == "ooooo........");

  std::string marked = render::ascii(s, render::Overlays{true, false});
  CHECK(marked.find('B') != std::string::npos);  // (0,0), (12,6) and (6,4) sit on both
  CHECK(marked.find('L') != std::string::npos);
  CHECK(marked.find('U') != std::string::npos);
  // interior cells stay 'o'
  CHECK(marked.find('o') != std::string::npos);
  // deterministic
  CHECK(render::ascii(s, render::Overlays{true, false}) == marked);
}

TEST_CASE("svg rendering") {
  PointSet s = ps2({{0, 0}, {1, 0}, {1, 1}});
  std::string svg = render::svg(s, render::Overlays{true, false});
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(std::count(svg.begin(), svg.end(), '\n') > 3);
  std::size_t rects = 0;
  for (std::size_t at = svg.find("<rect"); at != std::string::npos; at = svg.find("<rect", at + 1))
    ++rects;
  CHECK(rects == s.size());
  CHECK(svg.find("<polyline") != std::string::npos);

  PointSet cube(3);
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) cube.insert(Point(x, y, z));
  std::string svg3 = render::svg(cube, render::Overlays{false, true});
  CHECK(svg3.find(">xy<") != std::string::npos);
  CHECK(svg3.find(">xz<") != std::string::npos);
  CHECK(svg3.find(">yz<") != std::string::npos);
}

TEST_CASE("3d ascii rendering marks chain overlays") {
  PointSet cube(3);
  for (int x = 0; x <= 1; ++x)
    for (int y = 0; y <= 1; ++y)
      for (int z = 0; z <= 1; ++z) cube.insert(Point(x, y, z));
  std::string art = render::ascii(cube, render::Overlays{false, true});
  CHECK(art.find("z=1:") != std::string::npos);
  CHECK(art.find('*') != std::string::npos);  // origin and apex sit on all three chains
}
