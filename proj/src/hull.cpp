#include "hull.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <unordered_map>

namespace innerpar::detail {

bool lex_less(const Vector& a, const Vector& b) {
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] < b[i]) return true;
    if (a[i] > b[i]) return false;
  }
  return false;
}

double hull_tolerance(std::span<const Vector> points) {
  double extent = 0.0;
  if (!points.empty()) {
    Vector lo = points.front(), hi = points.front();
    for (const Vector& p : points) {
      lo = lo.cwiseMin(p);
      hi = hi.cwiseMax(p);
    }
    extent = (hi - lo).maxCoeff();
  }
  return kGeomTol * std::max(1.0, extent);
}

namespace {

double cross2(const Eigen::Vector2d& o, const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return (a.x() - o.x()) * (b.y() - o.y()) - (a.y() - o.y()) * (b.x() - o.x());
}

// Monotone chain on projected 2D coordinates. Returns indices into `pts`,
// counterclockwise, starting at the lexicographic minimum.
//
// The chain runs with exact turn tests; a tolerant test there can drop a true
// corner when coordinates that should coincide differ by an ulp. Vertices
// within eps of the line through their neighbours are pruned afterwards.
std::vector<int> chain(const std::vector<Eigen::Vector2d>& pts, double eps) {
  std::vector<int> order(pts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) {
    if (pts[i].x() != pts[j].x()) return pts[i].x() < pts[j].x();
    return pts[i].y() < pts[j].y();
  });
  if (order.size() < 3) return order;

  std::vector<int> hull(2 * order.size());
  std::size_t k = 0;
  for (int idx : order) {
    while (k >= 2 && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx]) <= 0.0) --k;
    hull[k++] = idx;
  }
  for (std::size_t i = order.size() - 1, lower = k + 1; i-- > 0;) {
    const int idx = order[i];
    while (k >= lower && cross2(pts[hull[k - 2]], pts[hull[k - 1]], pts[idx]) <= 0.0) --k;
    hull[k++] = idx;
  }
  hull.resize(k > 0 ? k - 1 : 0);

  for (bool changed = true; changed && hull.size() >= 3;) {
    changed = false;
    for (std::size_t i = 0; i < hull.size() && hull.size() >= 3; ++i) {
      const int prev = hull[(i + hull.size() - 1) % hull.size()];
      const int next = hull[(i + 1) % hull.size()];
      const double len = (pts[next] - pts[prev]).norm();
      if (cross2(pts[prev], pts[hull[i]], pts[next]) <= eps * len || (pts[hull[i]] - pts[prev]).norm() <= eps) {
        hull.erase(hull.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        --i;
      }
    }
  }
  // Restart the cycle at the lexicographic minimum.
  const auto first = std::min_element(hull.begin(), hull.end(), [&](int i, int j) {
    if (pts[i].x() != pts[j].x()) return pts[i].x() < pts[j].x();
    return pts[i].y() < pts[j].y();
  });
  std::rotate(hull.begin(), first, hull.end());
  return hull;
}

}  // namespace

Hull hull2d(std::span<const Vector> points) {
  if (points.size() < 3) throw GeometryError(ErrorKind::DegenerateInput, "need at least 3 points");
  const double eps = hull_tolerance(points);
  std::vector<Eigen::Vector2d> pts;
  pts.reserve(points.size());
  for (const Vector& p : points) pts.emplace_back(p[0], p[1]);

  const std::vector<int> ids = chain(pts, eps);
  if (ids.size() < 3) throw GeometryError(ErrorKind::DegenerateInput, "points are collinear");

  Hull out;
  for (int i : ids) out.vertices.push_back(points[i]);
  const int m = static_cast<int>(ids.size());
  for (int i = 0; i < m; ++i) {
    const int j = (i + 1) % m;
    const Vector& a = out.vertices[i];
    const Vector& b = out.vertices[j];
    const Vector d = b - a;
    Vector nrm = make_vector({d[1], -d[0]});
    nrm /= nrm.norm();
    out.facets.push_back({nrm, 0.5 * (nrm.dot(a) + nrm.dot(b)), {i, j}});
  }
  return out;
}

namespace {

struct Face {
  std::array<int, 3> v;
  Eigen::Vector3d normal;
  double offset;
  std::vector<int> outside;
  bool alive = true;
};

class QuickHull {
 public:
  QuickHull(std::vector<Eigen::Vector3d> pts, double eps) : p_(std::move(pts)), eps_(eps) {}

  std::vector<Face> run() {
    seed();
    for (;;) {
      int f = -1;
      for (int i = 0; i < static_cast<int>(faces_.size()); ++i) {
        if (faces_[i].alive && !faces_[i].outside.empty()) {
          f = i;
          break;
        }
      }
      if (f < 0) break;
      add_point(f);
    }
    std::vector<Face> alive;
    for (Face& f : faces_)
      if (f.alive) alive.push_back(std::move(f));
    return alive;
  }

 private:
  static std::uint64_t key(int a, int b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  }

  double dist(const Face& f, int i) const { return f.normal.dot(p_[i]) - f.offset; }

  int make_face(int a, int b, int c) {
    Face f;
    f.v = {a, b, c};
    Eigen::Vector3d n = (p_[b] - p_[a]).cross(p_[c] - p_[a]);
    const double len = n.norm();
    f.normal = len > 0.0 ? Eigen::Vector3d(n / len) : Eigen::Vector3d::Zero();
    f.offset = (f.normal.dot(p_[a]) + f.normal.dot(p_[b]) + f.normal.dot(p_[c])) / 3.0;
    const int id = static_cast<int>(faces_.size());
    faces_.push_back(std::move(f));
    edges_[key(a, b)] = id;
    edges_[key(b, c)] = id;
    edges_[key(c, a)] = id;
    return id;
  }

  void seed() {
    const int n = static_cast<int>(p_.size());
    int i0 = 0;
    for (int i = 1; i < n; ++i) {
      if (p_[i].x() < p_[i0].x() || (p_[i].x() == p_[i0].x() && p_[i].y() < p_[i0].y())) i0 = i;
    }
    int i1 = -1;
    double best = eps_;
    for (int i = 0; i < n; ++i) {
      const double d = (p_[i] - p_[i0]).norm();
      if (d > best) best = d, i1 = i;
    }
    if (i1 < 0) throw GeometryError(ErrorKind::DegenerateInput, "all points coincide");
    const Eigen::Vector3d axis = (p_[i1] - p_[i0]).normalized();
    int i2 = -1;
    best = eps_;
    for (int i = 0; i < n; ++i) {
      const Eigen::Vector3d w = p_[i] - p_[i0];
      const double d = (w - w.dot(axis) * axis).norm();
      if (d > best) best = d, i2 = i;
    }
    if (i2 < 0) throw GeometryError(ErrorKind::DegenerateInput, "points are collinear");
    const Eigen::Vector3d pn = (p_[i1] - p_[i0]).cross(p_[i2] - p_[i0]).normalized();
    int i3 = -1;
    best = eps_;
    for (int i = 0; i < n; ++i) {
      const double d = std::abs(pn.dot(p_[i] - p_[i0]));
      if (d > best) best = d, i3 = i;
    }
    if (i3 < 0) throw GeometryError(ErrorKind::DegenerateInput, "points are coplanar");

    if (pn.dot(p_[i3] - p_[i0]) > 0.0) std::swap(i1, i2);
    // (i0,i1,i2) now faces away from i3.
    make_face(i0, i1, i2);
    make_face(i0, i3, i1);
    make_face(i1, i3, i2);
    make_face(i2, i3, i0);

    std::vector<int> rest;
    for (int i = 0; i < n; ++i)
      if (i != i0 && i != i1 && i != i2 && i != i3) rest.push_back(i);
    assign(rest, 0);
  }

  void assign(const std::vector<int>& pts, int first_face) {
    for (int q : pts) {
      int target = -1;
      double best = eps_;
      for (int f = first_face; f < static_cast<int>(faces_.size()); ++f) {
        if (!faces_[f].alive) continue;
        const double d = dist(faces_[f], q);
        if (d > best) best = d, target = f;
      }
      if (target >= 0) faces_[target].outside.push_back(q);
    }
  }

  void add_point(int start) {
    const std::vector<int>& cand = faces_[start].outside;
    int apex = cand.front();
    for (int q : cand)
      if (dist(faces_[start], q) > dist(faces_[start], apex)) apex = q;

    std::vector<int> visible{start};
    std::vector<char> state(faces_.size(), 0);  // 1 visible, 2 hidden
    state[start] = 1;
    std::vector<std::pair<int, int>> horizon;
    for (std::size_t s = 0; s < visible.size(); ++s) {
      const Face& f = faces_[visible[s]];
      for (int e = 0; e < 3; ++e) {
        const int a = f.v[e], b = f.v[(e + 1) % 3];
        const int g = edges_.at(key(b, a));
        if (state[g] == 0) {
          state[g] = dist(faces_[g], apex) > eps_ ? 1 : 2;
          if (state[g] == 1) visible.push_back(g);
        }
        if (state[g] == 2) horizon.emplace_back(a, b);
      }
    }

    std::vector<int> orphans;
    for (int id : visible) {
      Face& f = faces_[id];
      f.alive = false;
      for (int q : f.outside)
        if (q != apex) orphans.push_back(q);
      f.outside.clear();
      for (int e = 0; e < 3; ++e) edges_.erase(key(f.v[e], f.v[(e + 1) % 3]));
    }

    const int first_new = static_cast<int>(faces_.size());
    for (const auto& [a, b] : horizon) make_face(a, b, apex);
    assign(orphans, first_new);
  }

  std::vector<Eigen::Vector3d> p_;
  double eps_;
  std::vector<Face> faces_;
  std::unordered_map<std::uint64_t, int> edges_;
};

struct DisjointSets {
  explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  }
  void unite(int a, int b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> parent;
};

}  // namespace

Hull hull3d(std::span<const Vector> points) {
  if (points.size() < 4) throw GeometryError(ErrorKind::DegenerateInput, "need at least 4 points");
  const double eps = hull_tolerance(points);
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(points.size());
  for (const Vector& p : points) pts.emplace_back(p[0], p[1], p[2]);

  std::vector<Face> tris = QuickHull(pts, eps).run();
  const int nt = static_cast<int>(tris.size());

  // Merge edge-adjacent triangles whose vertices lie within eps of each other's plane.
  std::unordered_map<std::uint64_t, int> owner;
  auto key = [](int a, int b) {
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
  };
  for (int t = 0; t < nt; ++t)
    for (int e = 0; e < 3; ++e) owner[key(tris[t].v[e], tris[t].v[(e + 1) % 3])] = t;
  auto coplanar = [&](const Face& f, const Face& g) {
    for (int i : g.v)
      if (std::abs(f.normal.dot(pts[i]) - f.offset) > eps) return false;
    return true;
  };
  DisjointSets groups(nt);
  for (int t = 0; t < nt; ++t) {
    for (int e = 0; e < 3; ++e) {
      const auto it = owner.find(key(tris[t].v[(e + 1) % 3], tris[t].v[e]));
      if (it == owner.end()) continue;
      const int u = it->second;
      if (coplanar(tris[t], tris[u]) && coplanar(tris[u], tris[t])) groups.unite(t, u);
    }
  }

  struct Group {
    Eigen::Vector3d normal = Eigen::Vector3d::Zero();
    std::vector<int> pts;
  };
  std::vector<int> group_of(nt, -1);
  std::vector<Group> merged;
  for (int t = 0; t < nt; ++t) {
    const int root = groups.find(t);
    if (group_of[root] < 0) {
      group_of[root] = static_cast<int>(merged.size());
      merged.emplace_back();
    }
    Group& g = merged[group_of[root]];
    const auto& v = tris[t].v;
    g.normal += (pts[v[1]] - pts[v[0]]).cross(pts[v[2]] - pts[v[0]]);
    g.pts.insert(g.pts.end(), v.begin(), v.end());
  }

  struct RawFacet {
    Eigen::Vector3d normal;
    double offset;
    std::vector<int> cycle;  // indices into `points`
  };
  std::vector<RawFacet> raw;
  std::vector<char> extreme(points.size(), 0);
  for (Group& g : merged) {
    std::sort(g.pts.begin(), g.pts.end());
    g.pts.erase(std::unique(g.pts.begin(), g.pts.end()), g.pts.end());
    const Eigen::Vector3d n = g.normal.normalized();
    const Eigen::Vector3d u = n.unitOrthogonal();
    const Eigen::Vector3d w = n.cross(u);
    std::vector<Eigen::Vector2d> proj;
    for (int i : g.pts) proj.emplace_back(u.dot(pts[i]), w.dot(pts[i]));
    const std::vector<int> ring = chain(proj, eps);
    if (ring.size() < 3) continue;
    RawFacet rf{n, 0.0, {}};
    for (int r : ring) {
      rf.cycle.push_back(g.pts[r]);
      rf.offset += n.dot(pts[g.pts[r]]);
      extreme[g.pts[r]] = 1;
    }
    rf.offset /= static_cast<double>(ring.size());
    raw.push_back(std::move(rf));
  }

  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(points.size()); ++i)
    if (extreme[i]) order.push_back(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return lex_less(points[a], points[b]); });
  std::vector<int> remap(points.size(), -1);
  Hull out;
  for (int i : order) {
    remap[i] = static_cast<int>(out.vertices.size());
    out.vertices.push_back(points[i]);
  }
  for (const RawFacet& rf : raw) {
    HullFacet hf{make_vector({rf.normal.x(), rf.normal.y(), rf.normal.z()}), rf.offset, {}};
    for (int i : rf.cycle) hf.cycle.push_back(remap[i]);
    out.facets.push_back(std::move(hf));
  }
  std::sort(out.facets.begin(), out.facets.end(), [](const HullFacet& a, const HullFacet& b) {
    return lex_less(a.normal, b.normal);
  });
  return out;
}

}  // namespace innerpar::detail
