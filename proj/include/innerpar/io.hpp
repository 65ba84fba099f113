#pragma once

#include "innerpar/polytope.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace innerpar::io {

// Body files: {"dim": n, "vertices": [[...], ...]} or
// {"dim": n, "halfspaces": [{"a": [...], "b": r}, ...]}. "dim" may be omitted
// when it can be read off the coordinates. Malformed input throws
// GeometryError(InvalidInput).
Body read_body(std::istream& in);
Body load_body(const std::string& path);
void write_body(std::ostream& out, const Body& body);

// A JSON array of coordinate arrays, each of length dim.
std::vector<Vector> read_points(std::istream& in, int dim);
std::vector<Vector> load_points(const std::string& path, int dim);

}  // namespace innerpar::io
