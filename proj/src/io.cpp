#include "wheelset/io.hpp"

#include <fstream>
#include <sstream>

namespace wheelset {

namespace {

// one data line -> coordinate tokens; empty result for blank/comment lines
std::vector<std::string> tokens_of_line(const std::string& line) {
  const size_t hash = line.find('#');
  std::istringstream in(hash == std::string::npos ? line : line.substr(0, hash));
  std::vector<std::string> toks;
  std::string tok;
  while (in >> tok) toks.push_back(tok);
  return toks;
}

Point parse_point(const std::vector<std::string>& toks, size_t first,
                  size_t lineno) {
  std::vector<Rat> coords;
  coords.reserve(toks.size() - first);
  for (size_t i = first; i < toks.size(); ++i) {
    try {
      coords.push_back(parse_rational(toks[i]));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  if (coords.empty())
    throw ParseError("line " + std::to_string(lineno) + ": no coordinates");
  return Point(std::move(coords));
}

void check_dim(size_t& dim, const Point& p, size_t lineno) {
  if (dim == 0)
    dim = p.dim();
  else if (p.dim() != dim)
    throw ParseError("line " + std::to_string(lineno) +
                     ": inconsistent dimension (got " + std::to_string(p.dim()) +
                     ", file uses " + std::to_string(dim) + ")");
}

}  // namespace

PointFile read_point_file(std::istream& in) {
  PointFile file;
  size_t dim = 0;
  size_t lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const std::vector<std::string> toks = tokens_of_line(line);
    if (toks.empty()) continue;
    if (toks[0] == "w:") {
      if (file.extra)
        throw ParseError("line " + std::to_string(lineno) +
                         ": more than one w line");
      file.extra = parse_point(toks, 1, lineno);
      check_dim(dim, *file.extra, lineno);
    } else {
      file.points.push_back(parse_point(toks, 0, lineno));
      check_dim(dim, file.points.back(), lineno);
    }
  }
  if (file.points.empty() && !file.extra) throw ParseError("no points in file");
  return file;
}

PointFile read_point_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return read_point_file(in);
}

RatMatrix read_matrix_file(std::istream& in) {
  RatMatrix rows;
  size_t lineno = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    const std::vector<std::string> toks = tokens_of_line(line);
    if (toks.empty()) continue;
    if (toks[0] == "w:")
      throw ParseError("line " + std::to_string(lineno) +
                       ": matrix files have no w line");
    const Point row = parse_point(toks, 0, lineno);
    if (!rows.empty() && row.dim() != rows[0].size())
      throw ParseError("line " + std::to_string(lineno) +
                       ": inconsistent row width");
    rows.push_back(row.coords);
  }
  if (rows.empty()) throw ParseError("no rows in file");
  return rows;
}

RatMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return read_matrix_file(in);
}

std::string to_point_file(const std::vector<Point>& points,
                          const std::optional<Point>& extra) {
  std::ostringstream out;
  for (const Point& p : points) out << to_string(p) << "\n";
  if (extra) out << "w: " << to_string(*extra) << "\n";
  return out.str();
}

}  // namespace wheelset
