#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "wheelset/exact.hpp"
#include "wheelset/linalg.hpp"

namespace wheelset {

/// Parsed point file. The format is line-based: `#` starts a comment that
/// runs to the end of the line, blank lines are skipped, every other line
/// holds one point as whitespace-separated coordinates, each an integer or
/// a `p/q` rational. At most one line may carry the `w:` prefix; it marks
/// the extra point (hub or query) and is kept out of `points`.
struct PointFile {
  std::vector<Point> points;
  std::optional<Point> extra;
};

PointFile read_point_file(std::istream& in);
PointFile read_point_file(const std::string& path);

/// Matrix files share the tokenization of point files (comments, blank
/// lines, integer or `p/q` entries) but allow no `w:` line; every row must
/// have the same width.
RatMatrix read_matrix_file(std::istream& in);
RatMatrix read_matrix_file(const std::string& path);

/// Serializes points back into the file format, one line per point and the
/// extra point last under its `w:` prefix. Parsing the result reproduces
/// the arguments exactly.
std::string to_point_file(const std::vector<Point>& points,
                          const std::optional<Point>& extra);

}  // namespace wheelset
