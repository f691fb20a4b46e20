#include "polyanti/pointfile.hpp"

#include <fstream>
#include <sstream>

namespace polyanti::io {

namespace {

// strict non-negative decimal integer, no signs, no suffix junk
bool parse_uint(const std::string& token, long long& out) {
  if (token.empty() || token.size() > 10) return false;
  out = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') return false;
    out = out * 10 + (ch - '0');
  }
  return true;
}

std::string strip(const std::string& line) {
  std::size_t b = line.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = line.find_last_not_of(" \t\r");
  return line.substr(b, e - b + 1);
}

}  // namespace

PointSet parse_point_file(std::istream& in) {
  std::string raw;
  int lineno = 0;
  int dim = 0;
  PointSet set(2);
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = strip(raw);
    if (line.empty() || line[0] == '#') continue;

    std::istringstream tokens(line);
    if (dim == 0) {
      std::string head, value, extra;
      tokens >> head >> value;
      if (head != "dim" || !(tokens >> extra).fail())
        throw parse_error(lineno, "expected header 'dim <d>'");
      long long d;
      if (!parse_uint(value, d) || (d != 2 && d != 3))
        throw parse_error(lineno, "dimension must be 2 or 3");
      dim = int(d);
      set = PointSet(dim);
      continue;
    }

    std::string token;
    std::vector<int> coords;
    while (tokens >> token) {
      long long v;
      if (!parse_uint(token, v)) throw parse_error(lineno, "bad coordinate '" + token + "'");
      if (v > kMaxCoord) throw parse_error(lineno, "coordinate " + token + " exceeds cap");
      coords.push_back(int(v));
    }
    if (int(coords.size()) != dim)
      throw parse_error(lineno, "expected " + std::to_string(dim) + " coordinates, got " +
                                    std::to_string(coords.size()));
    Point p = Point::of(coords);
    if (set.contains(p)) throw parse_error(lineno, "duplicate point " + p.str());
    set.insert(p);
  }
  if (dim == 0) throw parse_error(lineno ? lineno : 1, "missing 'dim <d>' header");
  return set;
}

PointSet parse_point_file_text(const std::string& text) {
  std::istringstream in(text);
  return parse_point_file(in);
}

PointSet load_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open '" + path + "'");
  return parse_point_file(in);
}

std::string format_point_file(const PointSet& s) {
  std::ostringstream out;
  out << "dim " << s.dim() << "\n";
  for (const Point& p : s.points()) {
    out << p[0] << ' ' << p[1];
    if (s.dim() == 3) out << ' ' << p[2];
    out << '\n';
  }
  return out.str();
}

void save_point_file(const std::string& path, const PointSet& s) {
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write '" + path + "'");
  out << format_point_file(s);
}

}  // namespace polyanti::io
