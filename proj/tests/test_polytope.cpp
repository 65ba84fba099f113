#include <doctest.h>

#include "innerpar/generate.hpp"
#include "innerpar/polytope.hpp"

#include <algorithm>
#include <cmath>
#include <random>

using namespace innerpar;

namespace {

Vector v2(double x, double y) { return make_vector({x, y}); }
Vector v3(double x, double y, double z) { return make_vector({x, y, z}); }

Body square() {
  const double hw[] = {1.0, 1.0};
  return gen::box(hw);
}

Body triangle_t() { return Body::from_points(std::vector{v2(-1, -1), v2(3, -1), v2(-1, 3)}, 2); }

bool same_points(std::vector<Vector> a, std::vector<Vector> b, double tol) {
  if (a.size() != b.size()) return false;
  for (const Vector& p : a) {
    auto it = std::find_if(b.begin(), b.end(), [&](const Vector& q) { return (p - q).norm() <= tol; });
    if (it == b.end()) return false;
    b.erase(it);
  }
  return true;
}

// Independent extremality oracle: p is not extreme iff it lies in a triangle of other points.
bool in_some_triangle(const Vector& p, const std::vector<Vector>& pts) {
  auto orient = [](const Vector& a, const Vector& b, const Vector& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  };
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const Vector &a = pts[i], &b = pts[j], &c = pts[k];
        if ((a - p).norm() == 0 || (b - p).norm() == 0 || (c - p).norm() == 0) continue;
        const double d1 = orient(a, b, p), d2 = orient(b, c, p), d3 = orient(c, a, p);
        const bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
        if (!(neg && pos)) return true;
      }
  return false;
}

Vector random_direction(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g;
  Vector d(dim);
  for (int i = 0; i < dim; ++i) d[i] = g(rng);
  return d.normalized();
}

}  // namespace

TEST_CASE("convex_hull drops interior points") {
  const auto hull = convex_hull(std::vector{v2(0, 0), v2(1, 0), v2(0, 1), v2(0.2, 0.2)}, 2);
  REQUIRE(hull.vertices.size() == 3);
  CHECK(hull.vertices[0] == v2(0, 0));
  CHECK(hull.vertices[1] == v2(1, 0));
  CHECK(hull.vertices[2] == v2(0, 1));
}

TEST_CASE("convex_hull of cube corners plus center") {
  std::vector<Vector> pts{v3(0.5, 0.5, 0.5)};
  for (int m = 0; m < 8; ++m) pts.push_back(v3(m & 1, m >> 1 & 1, m >> 2 & 1));
  const auto hull = convex_hull(pts, 3);
  REQUIRE(hull.vertices.size() == 8);
  CHECK(std::is_sorted(hull.vertices.begin(), hull.vertices.end(), [](const Vector& a, const Vector& b) {
    return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
  }));
  CHECK(same_points(hull.vertices, std::vector<Vector>(pts.begin() + 1, pts.end()), 0.0));
}

TEST_CASE("convex_hull of random disk points returns exactly the extreme points") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vector> pts;
  while (pts.size() < 100) {
    Vector p = v2(u(rng), u(rng));
    if (p.squaredNorm() <= 1.0) pts.push_back(p);
  }
  const auto hull = convex_hull(pts, 2);
  for (const Vector& v : hull.vertices) CHECK_FALSE(in_some_triangle(v, pts));
  for (const Vector& p : pts) {
    const bool listed = std::any_of(hull.vertices.begin(), hull.vertices.end(), [&](const Vector& v) { return v == p; });
    if (!listed) CHECK(in_some_triangle(p, pts));
  }
}

TEST_CASE("degenerate point sets are rejected") {
  CHECK_THROWS_AS(convex_hull(std::vector{v2(0, 0), v2(1, 1), v2(2, 2)}, 2), GeometryError);
  CHECK_THROWS_AS(convex_hull(std::vector{v3(0, 0, 0), v3(1, 0, 0), v3(0, 1, 0), v3(1, 1, 0)}, 3),
                  GeometryError);
  try {
    convex_hull(std::vector{v2(0, 0), v2(1, 1), v2(2, 2)}, 2);
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::DegenerateInput);
  }
}

TEST_CASE("hrep_from_vrep") {
  SUBCASE("unit square") {
    const auto h = hrep_from_vrep(VPolytope{2, {v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}});
    REQUIRE(h.halfspaces.size() == 4);
    for (const Halfspace& hs : h.halfspaces) {
      CHECK(std::abs(hs.normal.norm() - 1.0) <= 1e-12);
      const double expected = (hs.normal[0] + hs.normal[1]) > 0 ? 1.0 : 0.0;
      CHECK(std::abs(hs.offset - expected) <= 1e-12);
      CHECK(std::abs(std::abs(hs.normal[0]) + std::abs(hs.normal[1]) - 1.0) <= 1e-12);
    }
  }
  SUBCASE("simplex") {
    const auto h = hrep_from_vrep(gen::simplex(3).vrep());
    CHECK(h.halfspaces.size() == 4);
  }
}

TEST_CASE("vrep_from_hrep") {
  HPolytope h{2, {{v2(1, 0), 1}, {v2(-1, 0), 1}, {v2(0, 1), 1}, {v2(0, -1), 1}}};
  const std::vector<Vector> corners{v2(-1, -1), v2(1, -1), v2(1, 1), v2(-1, 1)};
  CHECK(same_points(vrep_from_hrep(h).vertices, corners, 1e-12));

  h.halfspaces.push_back({v2(1, 0), 5});
  CHECK(same_points(vrep_from_hrep(h).vertices, corners, 1e-12));

  HPolytope band{2, {{v2(1, 0), 0}, {v2(-1, 0), 0}}};
  CHECK_THROWS_AS(vrep_from_hrep(band), GeometryError);
  HPolytope half{2, {{v2(1, 0), 1}, {v2(0, 1), 1}, {v2(0, -1), 1}}};
  try {
    vrep_from_hrep(half);
    FAIL("unbounded intersection accepted");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::EmptyOrUnbounded);
  }
}

TEST_CASE("round trip through H-representation") {
  std::mt19937_64 rng(11);
  for (int dim : {2, 3}) {
    for (int trial = 0; trial < 40; ++trial) {
      const Body b = gen::random_hull(6 + trial % 20, dim, rng);
      const VPolytope back = vrep_from_hrep(hrep_from_vrep(b.vrep()));
      REQUIRE(back.vertices.size() == b.vertices().size());
      if (dim == 3) {
        for (std::size_t i = 0; i < back.vertices.size(); ++i)
          CHECK((back.vertices[i] - b.vertices()[i]).norm() <= 1e-9);
      } else {
        CHECK(same_points(back.vertices, b.vertices(), 1e-9));
      }
    }
  }
}

TEST_CASE("interior_point") {
  const HPolytope sq = square().hrep();
  const auto ip = interior_point(sq);
  CHECK(ip.point.norm() <= 1e-12);
  CHECK(std::abs(ip.slack - 1.0) <= 1e-12);

  const HPolytope band{2, {{v2(1, 0), 0}, {v2(-1, 0), 0}}};
  CHECK_FALSE(find_interior_point(band).has_value());
  try {
    interior_point(band);
    FAIL("empty band accepted");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::Empty);
  }

  const double hw[] = {2.0, 1.0};
  const auto rect = interior_point(gen::box(hw).hrep());
  CHECK(std::abs(rect.slack - 1.0) <= 1e-12);
  CHECK(std::abs(rect.point[1]) <= 1e-12);
  CHECK(std::abs(rect.point[0]) <= 1.0 + 1e-12);
}

TEST_CASE("canonicalize merges duplicates and drops redundant rows") {
  HPolytope h{2, {{v2(2, 0), 2}, {v2(1, 0), 0.5}, {v2(-1, 0), 1}, {v2(0, 1), 1}, {v2(0, -1), 1}, {v2(1, 1), 10}}};
  const HPolytope c = canonicalize(h);
  REQUIRE(c.halfspaces.size() == 4);
  CHECK(c.halfspaces[0].normal == v2(1, 0));
  CHECK(c.halfspaces[0].offset == 0.5);
}

TEST_CASE("volume") {
  CHECK(Body::from_points(std::vector{v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}, 2).volume() ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(volume(gen::simplex(3)) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(volume(triangle_t()) == doctest::Approx(8.0).epsilon(1e-14));
}

TEST_CASE("support") {
  const Body sq = square();
  CHECK(support(sq, v2(1, 1)) == doctest::Approx(2.0));
  CHECK(support(sq, v2(1 / std::sqrt(2.0), 1 / std::sqrt(2.0))) == doctest::Approx(std::sqrt(2.0)));
  CHECK(support(gen::diamond(2), v2(1, 0)) == doctest::Approx(1.0));
  try {
    support(sq, v2(0, 0));
    FAIL("zero direction accepted");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::ZeroDirection);
  }
}

TEST_CASE("gauge") {
  CHECK(gauge(square(), v2(2, 0)) == doctest::Approx(2.0));
  CHECK(gauge(square(), v2(0, 0)) == 0.0);
  CHECK(gauge(gen::diamond(2), v2(0.5, 0.5)) == doctest::Approx(1.0).epsilon(1e-14));
  try {
    gauge(translate(square(), v2(1, 0)), v2(0.5, 0));
    FAIL("origin on boundary accepted");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::OriginNotInterior);
  }
}

TEST_CASE("minkowski_sum") {
  const Body unit = Body::from_points(std::vector{v2(0, 0), v2(1, 0), v2(1, 1), v2(0, 1)}, 2);
  const Body twice = minkowski_sum(unit, unit);
  CHECK(same_points(twice.vertices(), {v2(0, 0), v2(2, 0), v2(2, 2), v2(0, 2)}, 1e-14));
  CHECK(minkowski_sum(triangle_t(), square()).volume() == doctest::Approx(28.0).epsilon(1e-13));
  const Body shifted = minkowski_sum(unit, v2(3, -1));
  CHECK(same_points(shifted.vertices(), translate(unit, v2(3, -1)).vertices(), 1e-15));

  std::vector<Vector> cube;
  for (int m = 0; m < 8; ++m) cube.push_back(v3(m & 1, m >> 1 & 1, m >> 2 & 1));
  const Body c = Body::from_points(cube, 3);
  const Body cc = minkowski_sum(c, c);
  CHECK(cc.vertices().size() == 8);
  CHECK(cc.facets().size() == 6);
  CHECK(cc.volume() == doctest::Approx(8.0).epsilon(1e-13));

  CHECK_THROWS_AS(minkowski_sum(unit, c), GeometryError);
}

TEST_CASE("scale_translate") {
  const Body t = triangle_t();
  const Body same = scale_translate(t, 1.0, Vector::Zero(2));
  CHECK(same_points(same.vertices(), t.vertices(), 0.0));
  CHECK(scale_translate(square(), 2.0, Vector::Zero(2)).volume() == doctest::Approx(16.0));
  const Body twice = scale_translate(scale_translate(t, 0.5, v2(1, 0)), 0.5, v2(1, 0));
  const Body once = scale_translate(t, 0.25, v2(1.5, 0));
  CHECK(same_points(twice.vertices(), once.vertices(), 1e-14));
  try {
    scale_translate(t, 0.0, Vector::Zero(2));
    FAIL("zero ratio accepted");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::NonpositiveRatio);
  }
}

TEST_CASE("body invariants on random polytopes") {
  std::mt19937_64 rng(5);
  for (int dim : {2, 3}) {
    for (int trial = 0; trial < 30; ++trial) {
      const Body b = gen::random_hull(5 + trial, dim, rng);
      for (const Vector& v : b.vertices())
        for (const Halfspace& h : b.hrep().halfspaces) CHECK(h.normal.dot(v) <= h.offset + 1e-9);
      for (const Facet& f : b.facets()) {
        int touching = 0;
        for (const Vector& v : b.vertices()) touching += std::abs(f.normal.dot(v) - f.offset) <= 1e-9;
        CHECK(touching >= dim);
        CHECK(std::abs(f.normal.norm() - 1.0) <= 1e-12);
      }
      CHECK(b.volume() > 0.0);
    }
  }
}

TEST_CASE("support additivity of Minkowski sums") {
  std::mt19937_64 rng(17);
  for (int dim : {2, 3}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Body a = gen::random_hull(8, dim, rng);
      const Body b = translate(gen::random_hull(7, dim, rng), random_direction(rng, dim));
      const Body s = minkowski_sum(a, b);
      for (int i = 0; i < 100; ++i) {
        const Vector d = random_direction(rng, dim);
        CHECK(std::abs(support(s, d) - support(a, d) - support(b, d)) <= 1e-9);
      }
    }
  }
}

TEST_CASE("gauge agrees with halfspace membership") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (int dim : {2, 3}) {
    const Body k0 = gen::random_hull(10, dim, rng);
    const Body k = translate(k0, -k0.centroid());
    for (int i = 0; i < 500; ++i) {
      Vector x(dim);
      for (int j = 0; j < dim; ++j) x[j] = u(rng);
      const double rho = gauge(k, x);
      if (std::abs(rho - 1.0) <= 1e-9) continue;
      CHECK((rho <= 1.0) == k.contains(x, 0.0));
    }
  }
}

TEST_CASE("volume scaling, translation invariance and Brunn-Minkowski") {
  std::mt19937_64 rng(23);
  for (int dim : {2, 3}) {
    for (int trial = 0; trial < 10; ++trial) {
      const Body a = gen::random_hull(9, dim, rng);
      const Body b = gen::random_hull(6, dim, rng);
      const double r = 0.5 + trial * 0.2;
      CHECK(std::abs(scale_translate(a, r, Vector::Zero(dim)).volume() / (std::pow(r, dim) * a.volume()) - 1.0) <=
            1e-9);
      CHECK(std::abs(translate(a, Vector::Constant(dim, 3.0)).volume() - a.volume()) <= 1e-12 * a.volume() + 1e-13);
      const double lhs = std::pow(minkowski_sum(a, b).volume(), 1.0 / dim);
      CHECK(lhs >= std::pow(a.volume(), 1.0 / dim) + std::pow(b.volume(), 1.0 / dim) - 1e-7);
    }
  }
}

TEST_CASE("volume centroid of a triangle is the vertex mean") {
  const Body t = triangle_t();
  CHECK((t.centroid() - v2(1.0 / 3.0, 1.0 / 3.0)).norm() <= 1e-14);
  CHECK((gen::simplex(3).centroid() - Vector::Constant(3, 0.25)).norm() <= 1e-14);
}
