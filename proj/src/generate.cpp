#include "innerpar/generate.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <utility>

namespace innerpar::gen {

Body box(std::span<const double> half_widths) {
  const int dim = static_cast<int>(half_widths.size());
  std::vector<Vector> corners;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    Vector c(dim);
    for (int i = 0; i < dim; ++i) c[i] = (mask >> i & 1) ? half_widths[i] : -half_widths[i];
    corners.push_back(c);
  }
  return Body::from_points(corners, dim);
}

Body simplex(int dim) {
  std::vector<Vector> pts{Vector::Zero(dim)};
  for (int i = 0; i < dim; ++i) pts.push_back(Vector::Unit(dim, i));
  return Body::from_points(pts, dim);
}

Body diamond(int dim) {
  std::vector<Vector> pts;
  for (int i = 0; i < dim; ++i) {
    pts.push_back(Vector::Unit(dim, i));
    pts.push_back(-Vector::Unit(dim, i));
  }
  return Body::from_points(pts, dim);
}

Body regular_polygon(int m, double radius, double phase) {
  if (m < 3) throw GeometryError(ErrorKind::InvalidInput, "regular polygon needs m >= 3");
  std::vector<Vector> pts;
  for (int i = 0; i < m; ++i) {
    const double a = phase + 2.0 * std::numbers::pi * i / m;
    pts.push_back(make_vector({radius * std::cos(a), radius * std::sin(a)}));
  }
  return Body::from_points(pts, 2);
}

Body icosphere(int subdivisions) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Eigen::Vector3d> v = {{-1, t, 0}, {1, t, 0},  {-1, -t, 0}, {1, -t, 0}, {0, -1, t},  {0, 1, t},
                                    {0, -1, -t}, {0, 1, -t}, {t, 0, -1},  {t, 0, 1},  {-t, 0, -1}, {-t, 0, 1}};
  for (auto& p : v) p.normalize();
  std::vector<std::array<int, 3>> tris = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
                                          {1, 5, 9},  {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
                                          {3, 9, 4},  {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
                                          {4, 9, 5},  {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  for (int s = 0; s < subdivisions; ++s) {
    std::map<std::pair<int, int>, int> mid;
    auto midpoint = [&](int a, int b) {
      const auto key = std::minmax(a, b);
      auto it = mid.find(key);
      if (it != mid.end()) return it->second;
      v.push_back((v[a] + v[b]).normalized());
      const int id = static_cast<int>(v.size()) - 1;
      mid.emplace(key, id);
      return id;
    };
    std::vector<std::array<int, 3>> next;
    for (const auto& [a, b, c] : tris) {
      const int ab = midpoint(a, b), bc = midpoint(b, c), ca = midpoint(c, a);
      next.insert(next.end(), {{a, ab, ca}, {b, bc, ab}, {c, ca, bc}, {ab, bc, ca}});
    }
    tris = std::move(next);
  }
  std::vector<Vector> pts;
  for (const auto& p : v) pts.push_back(make_vector({p.x(), p.y(), p.z()}));
  return Body::from_points(pts, 3);
}

Body random_hull(int m, int dim, std::mt19937_64& rng) {
  if (dim != 2 && dim != 3) throw GeometryError(ErrorKind::InvalidInput, "dimension must be 2 or 3");
  if (m < dim + 1) throw GeometryError(ErrorKind::InvalidInput, "random hull needs at least dim+1 points");
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    std::vector<Vector> pts;
    while (static_cast<int>(pts.size()) < m) {
      Vector p(dim);
      for (int i = 0; i < dim; ++i) p[i] = u(rng);
      if (p.squaredNorm() <= 1.0) pts.push_back(p);
    }
    try {
      Body b = Body::from_points(pts, dim);
      if (b.facet_width() >= 0.05 * b.diameter()) return b;
    } catch (const GeometryError& e) {
      if (e.kind() != ErrorKind::DegenerateInput) throw;
    }
  }
}

Body circumscribed(const Body& k, std::span<const Vector> normals) {
  HPolytope h{k.dim(), {}};
  for (const Vector& n : normals) {
    const Halfspace hs = make_halfspace(n, 0.0);
    h.halfspaces.push_back({hs.normal, support(k, hs.normal)});
  }
  try {
    return Body::from_hpolytope(h);
  } catch (const GeometryError& e) {
    if (e.kind() == ErrorKind::EmptyOrUnbounded)
      throw GeometryError(ErrorKind::InvalidInput, "normals must positively span the space");
    throw;
  }
}

}  // namespace innerpar::gen
