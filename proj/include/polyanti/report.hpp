#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyanti/point.hpp"
#include "polyanti/pointfile.hpp"

namespace polyanti::io {

// Structured-text report:
//   scalar   "key: value"
//   section  "key:" followed by two-space-indented item lines
//   '#'-prefixed and blank lines are ignored when parsing
// Entry order is preserved; serialization is deterministic.
class Report {
 public:
  struct Entry {
    std::string key;
    std::string value;               // scalar payload
    std::vector<std::string> items;  // section payload
    bool is_section = false;
  };

  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, const char* value);  // keeps literals off the bool overload
  void add(const std::string& key, long long value);
  void add(const std::string& key, bool value);
  void add_section(const std::string& key, std::vector<std::string> items);

  const std::string* find(const std::string& key) const;
  const std::vector<std::string>* find_section(const std::string& key) const;
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  std::string str() const;
  static Report parse(const std::string& text);  // throws parse_error

 private:
  std::vector<Entry> entries_;
};

// Token forms used inside report values: a point is "x,y" or "x,y,z"; a
// chain or point list is space-separated point tokens.
std::string format_point_token(const Point& p);
Point parse_point_token(const std::string& token);
std::string format_point_sequence(const std::vector<Point>& pts);
std::string format_chain(const Chain& c);
std::vector<Point> parse_point_sequence(const std::string& text);

// Point-file-style data lines ("x y" / "x y z"), used for `input:` sections
// so reports replay through the same grammar as point files.
std::vector<std::string> point_set_lines(const PointSet& s);
PointSet point_set_from_lines(int dim, const std::vector<std::string>& lines);

}  // namespace polyanti::io
