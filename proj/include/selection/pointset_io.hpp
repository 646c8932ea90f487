#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "selection/point.hpp"

namespace sel {

// Point-set text format:
//   dim <d>
//   # comment lines start with '#'
//   x1 x2 ... xd        (one point per non-empty line)
// DownTriangle inputs carry a "# frame=sheared" comment.
struct PointSetFile {
  PointSet points;
  std::vector<std::string> comments;  // without the leading '#'
  bool sheared_frame = false;
};

PointSetFile read_point_set(std::istream& in);
PointSetFile read_point_set_file(const std::string& path);

void write_point_set(std::ostream& out, const PointSet& P,
                     const std::vector<std::string>& comments = {});
void write_point_set_file(const std::string& path, const PointSet& P,
                          const std::vector<std::string>& comments = {});

// Parses "x,y,..." where each coordinate is an integer or "a/b".
RationalPoint parse_rational_point(const std::string& text);

}  // namespace sel
