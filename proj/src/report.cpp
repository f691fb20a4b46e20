#include "polyanti/report.hpp"

#include <sstream>

namespace polyanti::io {

void Report::add(const std::string& key, const std::string& value) {
  entries_.push_back({key, value, {}, false});
}

void Report::add(const std::string& key, const char* value) { add(key, std::string(value)); }

void Report::add(const std::string& key, long long value) {
  add(key, std::to_string(value));
}

void Report::add(const std::string& key, bool value) {
  add(key, std::string(value ? "true" : "false"));
}

void Report::add_section(const std::string& key, std::vector<std::string> items) {
  entries_.push_back({key, "", std::move(items), true});
}

const std::string* Report::find(const std::string& key) const {
  for (const Entry& e : entries_)
    if (!e.is_section && e.key == key) return &e.value;
  return nullptr;
}

const std::vector<std::string>* Report::find_section(const std::string& key) const {
  for (const Entry& e : entries_)
    if (e.is_section && e.key == key) return &e.items;
  return nullptr;
}

std::string Report::str() const {
  std::ostringstream out;
  for (const Entry& e : entries_) {
    if (e.is_section) {
      out << e.key << ":\n";
      for (const std::string& item : e.items) out << "  " << item << '\n';
    } else {
      out << e.key << ": " << e.value << '\n';
    }
  }
  return out.str();
}

Report Report::parse(const std::string& text) {
  Report report;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  Entry* open_section = nullptr;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (line.size() > 2 && line[0] == ' ' && line[1] == ' ') {
      if (!open_section) throw parse_error(lineno, "indented line outside a section");
      open_section->items.push_back(line.substr(2));
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) throw parse_error(lineno, "expected 'key: value'");
    std::string key = line.substr(0, colon);
    if (key.empty()) throw parse_error(lineno, "empty key");
    if (colon + 1 == line.size()) {
      report.entries_.push_back({key, "", {}, true});
      open_section = &report.entries_.back();
    } else {
      if (line[colon + 1] != ' ') throw parse_error(lineno, "expected space after ':'");
      report.entries_.push_back({key, line.substr(colon + 2), {}, false});
      open_section = nullptr;
    }
  }
  return report;
}

std::string format_point_token(const Point& p) {
  std::string out = std::to_string(p[0]) + "," + std::to_string(p[1]);
  if (p.dim() == 3) out += "," + std::to_string(p[2]);
  return out;
}

Point parse_point_token(const std::string& token) {
  std::vector<int> coords;
  std::size_t pos = 0;
  while (pos <= token.size()) {
    std::size_t comma = token.find(',', pos);
    std::string part = token.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.empty() || part.size() > 5) throw invalid_input("bad point token '" + token + "'");
    int v = 0;
    for (char ch : part) {
      if (ch < '0' || ch > '9') throw invalid_input("bad point token '" + token + "'");
      v = v * 10 + (ch - '0');
    }
    coords.push_back(v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return Point::of(coords);
}

std::string format_point_sequence(const std::vector<Point>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += format_point_token(pts[i]);
  }
  return out;
}

std::string format_chain(const Chain& c) { return format_point_sequence(c.points()); }

std::vector<Point> parse_point_sequence(const std::string& text) {
  std::vector<Point> out;
  std::istringstream in(text);
  std::string token;
  while (in >> token) out.push_back(parse_point_token(token));
  return out;
}

std::vector<std::string> point_set_lines(const PointSet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (const Point& p : s.points()) {
    std::string line = std::to_string(p[0]) + " " + std::to_string(p[1]);
    if (s.dim() == 3) line += " " + std::to_string(p[2]);
    out.push_back(std::move(line));
  }
  return out;
}

PointSet point_set_from_lines(int dim, const std::vector<std::string>& lines) {
  std::string text = "dim " + std::to_string(dim) + "\n";
  for (const std::string& line : lines) text += line + "\n";
  return parse_point_file_text(text);
}

}  // namespace polyanti::io
