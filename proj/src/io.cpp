#include "innerpar/io.hpp"

#include <fstream>
#include <json.hpp>
#include <ostream>

namespace innerpar::io {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) { throw GeometryError(ErrorKind::InvalidInput, what); }

Vector to_vector(const json& j, int dim) {
  if (!j.is_array() || j.empty() || j.size() > 3) bad("coordinate array expected");
  if (dim > 0 && static_cast<int>(j.size()) != dim) bad("coordinate has wrong dimension");
  Vector v(static_cast<int>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number()) bad("coordinates must be numbers");
    v[static_cast<int>(i)] = j[i].get<double>();
  }
  return v;
}

json parse(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path);
  return in;
}

}  // namespace

Body read_body(std::istream& in) {
  const json j = parse(in);
  if (!j.is_object()) bad("body file must hold a JSON object");
  int dim = 0;
  if (j.contains("dim")) {
    if (!j["dim"].is_number_integer()) bad("dim must be an integer");
    dim = j["dim"].get<int>();
    if (dim != 2 && dim != 3) bad("dim must be 2 or 3");
  }
  if (j.contains("vertices")) {
    const json& vs = j["vertices"];
    if (!vs.is_array() || vs.empty()) bad("vertices must be a nonempty array");
    std::vector<Vector> points;
    for (const json& v : vs) {
      points.push_back(to_vector(v, dim));
      dim = static_cast<int>(points.back().size());
    }
    return Body::from_points(points, dim);
  }
  if (j.contains("halfspaces")) {
    const json& hs = j["halfspaces"];
    if (!hs.is_array() || hs.empty()) bad("halfspaces must be a nonempty array");
    HPolytope h;
    for (const json& entry : hs) {
      if (!entry.is_object() || !entry.contains("a") || !entry.contains("b") || !entry["b"].is_number())
        bad("halfspace entries need \"a\" and \"b\"");
      const Vector a = to_vector(entry["a"], dim);
      dim = static_cast<int>(a.size());
      h.halfspaces.push_back(make_halfspace(a, entry["b"].get<double>()));
    }
    h.dim = dim;
    return Body::from_hpolytope(h);
  }
  bad("body file needs \"vertices\" or \"halfspaces\"");
}

Body load_body(const std::string& path) {
  std::ifstream in = open(path);
  return read_body(in);
}

void write_body(std::ostream& out, const Body& body) {
  json vertices = json::array();
  for (const Vector& v : body.vertices()) {
    json row = json::array();
    for (int i = 0; i < v.size(); ++i) row.push_back(v[i]);
    vertices.push_back(std::move(row));
  }
  nlohmann::ordered_json j;
  j["dim"] = body.dim();
  j["vertices"] = std::move(vertices);
  out << j.dump() << '\n';
}

std::vector<Vector> read_points(std::istream& in, int dim) {
  const json j = parse(in);
  if (!j.is_array()) bad("points file must hold a JSON array");
  std::vector<Vector> points;
  for (const json& p : j) points.push_back(to_vector(p, dim));
  return points;
}

std::vector<Vector> load_points(const std::string& path, int dim) {
  std::ifstream in = open(path);
  return read_points(in, dim);
}

}  // namespace innerpar::io
