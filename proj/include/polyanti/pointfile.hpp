#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "polyanti/point.hpp"

namespace polyanti::io {

class parse_error : public std::runtime_error {
 public:
  parse_error(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

// Point file grammar:
//   header line  "dim <d>"            d in {2,3}
//   data lines   d space-separated non-negative decimal integers
//   '#'-prefixed and blank lines are ignored
// Duplicate points and malformed lines are rejected with their line number.
PointSet parse_point_file(std::istream& in);
PointSet parse_point_file_text(const std::string& text);
PointSet load_point_file(const std::string& path);  // invalid_input when unreadable

// Canonical form: header, then members sorted x-major, one per line.
std::string format_point_file(const PointSet& s);
void save_point_file(const std::string& path, const PointSet& s);

}  // namespace polyanti::io
