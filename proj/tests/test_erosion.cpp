#include <doctest.h>

#include "innerpar/erosion.hpp"
#include "innerpar/generate.hpp"
#include "innerpar/verify.hpp"

#include <cmath>
#include <random>

using namespace innerpar;

namespace {

Vector v2(double x, double y) { return make_vector({x, y}); }

Body box2(double a, double b) {
  const double hw[] = {a, b};
  return gen::box(hw);
}

Body triangle_t() { return Body::from_points(std::vector{v2(-1, -1), v2(3, -1), v2(-1, 3)}, 2); }

bool same_vertices(const Body& a, const Body& b, double tol) {
  if (a.vertices().size() != b.vertices().size()) return false;
  for (std::size_t i = 0; i < a.vertices().size(); ++i)
    if ((a.vertices()[i] - b.vertices()[i]).norm() > tol) return false;
  return true;
}

std::vector<verify::Pair> some_pairs() {
  std::vector<verify::Pair> pairs = verify::builtin_pairs(0);
  for (int i = 0; i < 6; ++i) pairs.push_back(verify::random_pair(2, 11, i));
  for (int i = 0; i < 3; ++i) pairs.push_back(verify::random_pair(3, 11, i));
  return pairs;
}

}  // namespace

TEST_CASE("inner_parallel: rectangle eroded by the square") {
  const auto e = inner_parallel(box2(2, 1), box2(1, 1), 0.5);
  REQUIRE(e);
  CHECK(same_vertices(*e, box2(1.5, 0.5), 1e-12));
}

TEST_CASE("inner_parallel: circumscribed triangle shrinks homothetically") {
  for (double lambda : {0.1, 0.25, 0.5, 0.9}) {
    const auto e = inner_parallel(triangle_t(), box2(1, 1), lambda);
    REQUIRE(e);
    CHECK(same_vertices(*e, scale_translate(triangle_t(), 1.0 - lambda, Vector::Zero(2)), 1e-12));
  }
}

TEST_CASE("inner_parallel: zero, beyond the inradius, negative") {
  const Body t = triangle_t();
  CHECK(same_vertices(*inner_parallel(t, box2(1, 1), 0.0), t, 0.0));
  CHECK_FALSE(inner_parallel(t, box2(1, 1), 1.0 + 1e-6));
  CHECK_FALSE(inner_parallel(t, box2(1, 1), 3.0));
  try {
    (void)inner_parallel(t, box2(1, 1), -0.1);
    FAIL("expected NegativeLambda");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::NegativeLambda);
  }
}

TEST_CASE("inradius examples") {
  const Inradius same = inradius(box2(1, 1), box2(1, 1));
  CHECK(same.r == doctest::Approx(1.0).epsilon(1e-12));

  const Inradius rect = inradius(box2(2, 1), box2(1, 1));
  CHECK(std::abs(rect.r - 1.0) <= 1e-10);

  const Inradius tri = inradius(triangle_t(), box2(1, 1));
  CHECK(std::abs(tri.r - 1.0) <= 1e-10);
  CHECK(tri.incenter.norm() <= 1e-10);

  // The octahedron fits the cube at scale 1 too.
  const double hw[] = {1, 1, 1};
  CHECK(std::abs(inradius(gen::box(hw), gen::diamond(3)).r - 1.0) <= 1e-10);
}

TEST_CASE("inradius: incenter + rK fits and nothing larger does") {
  for (const auto& pair : some_pairs()) {
    CAPTURE(pair.name);
    const Inradius in = inradius(pair.omega, pair.k);
    CHECK(in.r > 0);
    for (const Vector& v : pair.k.vertices()) CHECK(pair.omega.contains(in.incenter + in.r * v, 1e-8));
    CHECK_FALSE(inner_parallel(pair.omega, pair.k, in.r + 1e-6));
    CHECK(inner_parallel(pair.omega, pair.k, in.r * (1 - 1e-6)));
  }
}

TEST_CASE("ErosionFamily carries the inradius") {
  const ErosionFamily fam = ErosionFamily::make(box2(2, 1), box2(1, 1));
  CHECK(std::abs(fam.inradius - 1.0) <= 1e-10);
  const auto half = fam.at(0.5);
  REQUIRE(half);
  CHECK(half->volume() == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("distance examples") {
  const Body rect = box2(2, 1), sq = box2(1, 1);
  CHECK(distance(rect, sq, v2(0, 0)) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(distance(rect, sq, v2(2, 0.3))) <= 1e-12);
  CHECK(distance(rect, sq, v2(1.5, 0.0)) == doctest::Approx(0.5).epsilon(1e-12));

  const Inradius tri = inradius(triangle_t(), sq);
  CHECK(distance(triangle_t(), sq, tri.incenter) == doctest::Approx(tri.r).epsilon(1e-9));

  for (const auto& pair : some_pairs()) {
    const Inradius in = inradius(pair.omega, pair.k);
    CHECK(distance(pair.omega, pair.k, in.incenter) == doctest::Approx(in.r).epsilon(1e-8));
  }
}

TEST_CASE("distance errors") {
  const Body rect = box2(2, 1);
  try {
    (void)distance(rect, box2(1, 1), v2(3, 0));
    FAIL("expected PointOutside");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::PointOutside);
  }
  const Body off = translate(box2(1, 1), v2(2, 0));
  try {
    (void)distance(rect, off, v2(0, 0));
    FAIL("expected OriginNotInterior");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::OriginNotInterior);
  }
}

TEST_CASE("level sets of the distance are the inner parallel bodies") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& pair : some_pairs()) {
    CAPTURE(pair.name);
    const int dim = pair.omega.dim();
    const double r = inradius(pair.omega, pair.k).r;
    Vector lo = pair.omega.vertices().front(), hi = lo;
    for (const Vector& v : pair.omega.vertices()) lo = lo.cwiseMin(v), hi = hi.cwiseMax(v);
    for (int g = 0; g < 4; ++g) {
      const double lambda = 0.999 * r * u(rng);
      const auto body = inner_parallel(pair.omega, pair.k, lambda);
      int tested = 0;
      while (tested < 50) {
        Vector x(dim);
        for (int i = 0; i < dim; ++i) x[i] = lo[i] + (hi[i] - lo[i]) * u(rng);
        if (!pair.omega.contains(x, 0.0)) continue;
        ++tested;
        const double d = distance(pair.omega, pair.k, x);
        if (std::abs(d - lambda) <= 1e-8) continue;
        CHECK((body && body->contains(x, 0.0)) == (d >= lambda));
      }
    }
  }
}

TEST_CASE("nesting and concavity of the family") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const auto& pair : some_pairs()) {
    CAPTURE(pair.name);
    const double r = inradius(pair.omega, pair.k).r;
    for (int trial = 0; trial < 3; ++trial) {
      double l1 = 0.99 * r * u(rng), l2 = 0.99 * r * u(rng);
      if (l1 > l2) std::swap(l1, l2);
      const Body e1 = *inner_parallel(pair.omega, pair.k, l1);
      const Body e2 = *inner_parallel(pair.omega, pair.k, l2);
      for (const Vector& v : e2.vertices()) CHECK(e1.contains(v, 1e-8));

      const double t = u(rng);
      const Body mix = minkowski_sum(scale_translate(e1, 1 - t, Vector::Zero(e1.dim())),
                                     scale_translate(e2, t, Vector::Zero(e1.dim())));
      const HPolytope target = erode_halfspaces(pair.omega, pair.k, (1 - t) * l1 + t * l2);
      for (const Vector& v : mix.vertices())
        for (const Halfspace& h : target.halfspaces) CHECK(h.normal.dot(v) <= h.offset + 1e-8);
    }
  }
}
