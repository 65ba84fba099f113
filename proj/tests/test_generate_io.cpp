#include <doctest.h>

#include "innerpar/generate.hpp"
#include "innerpar/io.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

using namespace innerpar;

namespace {

Vector v2(double x, double y) { return make_vector({x, y}); }

std::string dump(const Body& b) {
  std::ostringstream out;
  io::write_body(out, b);
  return out.str();
}

Body parse(const std::string& text) {
  std::istringstream in(text);
  return io::read_body(in);
}

void check_invalid(const std::string& text) {
  CAPTURE(text);
  try {
    (void)parse(text);
    FAIL("expected InvalidInput");
  } catch (const GeometryError& e) {
    CHECK(e.kind() == ErrorKind::InvalidInput);
  }
}

}  // namespace

TEST_CASE("box, simplex, diamond") {
  const double hw[] = {2.0, 1.0};
  const Body b = gen::box(hw);
  CHECK(b.volume() == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(b.vertices().front() == v2(-2, -1));
  CHECK(gen::simplex(2).volume() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(gen::simplex(3).volume() == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
  CHECK(gen::diamond(3).volume() == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  CHECK(gen::diamond(2).vertices().size() == 4);
}

TEST_CASE("regular polygon and icosphere approximate the ball") {
  const Body p = gen::regular_polygon(64);
  CHECK(p.vertices().size() == 64);
  CHECK(p.volume() == doctest::Approx(32 * std::sin(2 * M_PI / 64)).epsilon(1e-12));
  for (const Facet& f : p.facets()) CHECK(f.offset >= std::cos(M_PI / 64) - 1e-12);

  const Body s = gen::icosphere(2);
  for (const Vector& v : s.vertices()) CHECK(v.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(s.volume() > 0.95 * 4.0 / 3.0 * M_PI);
}

TEST_CASE("random_hull is deterministic and well shaped") {
  for (int dim : {2, 3}) {
    std::mt19937_64 a(7), b(7);
    const Body x = gen::random_hull(20, dim, a), y = gen::random_hull(20, dim, b);
    CHECK(dump(x) == dump(y));
    CHECK(x.facet_width() >= 0.05 * x.diameter());
  }
}

TEST_CASE("circumscribed square gives the triangle") {
  const double hw[] = {1.0, 1.0};
  const double s = 1 / std::sqrt(2.0);
  const Body t = gen::circumscribed(gen::box(hw), std::vector{v2(-1, 0), v2(0, -1), v2(s, s)});
  REQUIRE(t.vertices().size() == 3);
  for (const Vector& want : {v2(-1, -1), v2(3, -1), v2(-1, 3)}) {
    double nearest = 1e300;
    for (const Vector& got : t.vertices()) nearest = std::min(nearest, (got - want).norm());
    CHECK(nearest <= 1e-12);
  }

  CHECK_THROWS_AS((void)gen::circumscribed(gen::box(hw), std::vector{v2(1, 0), v2(0, 1)}), GeometryError);
}

TEST_CASE("body json round trip") {
  std::mt19937_64 rng(3);
  for (int dim : {2, 3}) {
    const Body b = gen::random_hull(12, dim, rng);
    const Body back = parse(dump(b));
    REQUIRE(back.vertices().size() == b.vertices().size());
    for (std::size_t i = 0; i < b.vertices().size(); ++i) CHECK(back.vertices()[i] == b.vertices()[i]);
  }
  CHECK(dump(gen::simplex(2)).rfind("{\"dim\":2,\"vertices\":[[0.0,0.0],", 0) == 0);
}

TEST_CASE("body json from halfspaces") {
  const Body b = parse(R"({"dim": 2, "halfspaces": [{"a": [1, 0], "b": 2}, {"a": [-1, 0], "b": 2},
                                                    {"a": [0, 2], "b": 2}, {"a": [0, -1], "b": 1}]})");
  CHECK(b.volume() == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(parse(R"({"vertices": [[0,0,0],[1,0,0],[0,1,0],[0,0,1]]})").dim() == 3);
}

TEST_CASE("malformed body files") {
  check_invalid("not json");
  check_invalid("[1, 2]");
  check_invalid(R"({"dim": 4, "vertices": [[0,0,0,0]]})");
  check_invalid(R"({"dim": 2, "vertices": [[0,0,0]]})");
  check_invalid(R"({"dim": 2})");
  check_invalid(R"({"dim": 2, "vertices": [[0,"a"]]})");
  check_invalid(R"({"halfspaces": [{"a": [1, 0]}]})");
  CHECK_THROWS_AS((void)io::load_body("/nonexistent/body.json"), GeometryError);
}

TEST_CASE("points files") {
  std::istringstream in("[[0, 0], [1.5, -2]]");
  const auto pts = io::read_points(in, 2);
  REQUIRE(pts.size() == 2);
  CHECK(pts[1] == v2(1.5, -2));
  std::istringstream bad("[[0, 0, 1]]");
  CHECK_THROWS_AS((void)io::read_points(bad, 2), GeometryError);
}
