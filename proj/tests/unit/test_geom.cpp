#include <cmath>
#include <random>

#include "buffon/geom.hpp"
#include "buffon/set.hpp"
#include "doctest.h"

using namespace buffon;

TEST_CASE("normalize_line canonical forms") {
  const LineCoords a = normalize_line(3.0 * kPi / 2.0, 0.5);
  CHECK(a.theta == doctest::Approx(kPi / 2.0));
  CHECK(a.offset == doctest::Approx(-0.5));

  const LineCoords b = normalize_line(0.0, 1.0);
  CHECK(b.theta == 0.0);
  CHECK(b.offset == 1.0);

  const LineCoords c = normalize_line(kPi, 0.3);
  CHECK(c.theta == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(c.offset == doctest::Approx(-0.3));

  CHECK_THROWS_AS(normalize_line(NAN, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(normalize_line(0.0, INFINITY), std::invalid_argument);
}

TEST_CASE("normalize_line is idempotent and names the same line") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(-20.0, 20.0);
  std::uniform_real_distribution<double> off(-3.0, 3.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = ang(rng);
    const double p = off(rng);
    const LineCoords n1 = normalize_line(t, p);
    const LineCoords n2 = normalize_line(n1.theta, n1.offset);
    CHECK(n1 == n2);
    CHECK(n1.theta >= 0.0);
    CHECK(n1.theta < kPi);
    // A point of the raw line lies on the normalized one.
    const Vec2 q = p * unit(t) + 1.7 * Vec2{-std::sin(t), std::cos(t)};
    CHECK(std::abs(n1.signed_distance(q)) < 1e-9);
  }
}

TEST_CASE("primitive construction and validation") {
  CHECK(std::holds_alternative<Circle>(make_arc({0, 0}, 1.0, 0.3, kTwoPi)));
  CHECK(std::holds_alternative<Arc>(make_arc({0, 0}, 1.0, 0.3, kPi)));
  CHECK_THROWS_AS(make_segment({1, 1}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(make_circle({0, 0}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_circle({0, 0}, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(make_arc({0, 0}, 1.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(make_arc({0, 0}, 1.0, 0.0, 7.0), std::invalid_argument);
  CHECK_THROWS_AS(make_segment({NAN, 0}, {1, 1}), std::invalid_argument);

  CHECK(length(make_segment({0, 0}, {3, 4})) == doctest::Approx(5.0));
  CHECK(length(make_circle({2, 2}, 1.0)) == doctest::Approx(kTwoPi));
  CHECK(length(make_arc({0, 0}, 2.0, 1.0, 0.5)) == doctest::Approx(1.0));
}

TEST_CASE("circle intersections") {
  const Primitive unit_circle = Circle{{0, 0}, 1.0};
  auto r = intersect_line_primitive({0.0, 0.0}, unit_circle);
  CHECK(r.count == 2);
  CHECK_FALSE(r.degenerate);

  r = intersect_line_primitive({0.4, 2.0}, unit_circle);
  CHECK(r.count == 0);
  CHECK_FALSE(r.degenerate);

  r = intersect_line_primitive({1.1, 1.0}, unit_circle);
  CHECK(r.count == 0);
  CHECK(r.degenerate);

  r = intersect_line_primitive({1.1, 1.0 - 5e-10}, unit_circle);
  CHECK(r.degenerate);
  r = intersect_line_primitive({1.1, 1.0 - 5e-9}, unit_circle);
  CHECK_FALSE(r.degenerate);
  CHECK(r.count == 2);
}

TEST_CASE("segment intersections") {
  const Primitive s = Segment{{-1, 0}, {1, 0}};
  CHECK(intersect_line_primitive({0.0, 0.5}, s).count == 1);
  CHECK(intersect_line_primitive({0.0, 1.5}, s).count == 0);
  // Through an endpoint.
  auto r = intersect_line_primitive({0.0, 1.0}, s);
  CHECK(r.degenerate);
  CHECK(r.count == 0);
  // Collinear.
  r = intersect_line_primitive({kPi / 2.0, 0.0}, s);
  CHECK(r.degenerate);
  CHECK(r.count == 0);
  // Parallel, off the line.
  r = intersect_line_primitive({kPi / 2.0, 0.2}, s);
  CHECK_FALSE(r.degenerate);
  CHECK(r.count == 0);
}

TEST_CASE("arc intersections") {
  // Upper half of the unit circle.
  const Primitive upper = Arc{{0, 0}, 1.0, 0.0, kPi};
  CHECK(intersect_line_primitive({kPi / 2.0, 0.5}, upper).count == 2);
  CHECK(intersect_line_primitive({kPi / 2.0, -0.5}, upper).count == 0);
  CHECK(intersect_line_primitive({0.0, 0.5}, upper).count == 1);
  // Through both endpoints.
  auto r = intersect_line_primitive({kPi / 2.0, 0.0}, upper);
  CHECK(r.degenerate);
  // Tangent at the top.
  r = intersect_line_primitive({kPi / 2.0, 1.0}, upper);
  CHECK(r.degenerate);
  CHECK(r.count == 0);
  // Tangent to the circle at a point outside the arc: no contact at all.
  r = intersect_line_primitive({kPi / 2.0, -1.0}, upper);
  CHECK_FALSE(r.degenerate);
  CHECK(r.count == 0);
}

TEST_CASE("count_intersections examples") {
  const RectifiableSet empty;
  CHECK(count_intersections({0.3, 0.1}, empty).count == 0);

  RectifiableSet rings;
  rings.add(Circle{{0, 0}, 0.3});
  rings.add(Circle{{0, 0}, 0.8});
  CHECK(count_intersections({0.0, 0.5}, rings).count == 2);

  RectifiableSet grid;
  for (int i = 0; i <= 10; ++i) grid.add(Segment{{0.0, 0.1 * i}, {1.0, 0.1 * i}});
  CHECK(count_intersections({0.0, 0.37}, grid).count == 11);
}

TEST_CASE("projection pieces reproduce the crossing count") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  for (int trial = 0; trial < 1000; ++trial) {
    Primitive prim;
    switch (trial % 3) {
      case 0: prim = Segment{{u(rng), u(rng)}, {u(rng), u(rng)}}; break;
      case 1: prim = Circle{{u(rng), u(rng)}, 0.1 + std::abs(u(rng))}; break;
      default: prim = Arc{{u(rng), u(rng)}, 0.1 + std::abs(u(rng)), ang(rng), 0.1 + 6.0 * std::abs(u(rng))}; break;
    }
    const double theta = std::abs(u(rng)) * kPi;
    std::vector<ProjectionPiece> pieces;
    append_projection_pieces(prim, theta, pieces);
    const double p = 2.0 * u(rng);
    const auto hit = intersect_line_primitive({theta, p}, prim);
    if (hit.degenerate) continue;
    int inside = 0;
    for (const auto& piece : pieces) inside += (piece.lo < p && p < piece.hi) ? 1 : 0;
    CHECK(inside == hit.count);
  }
}

TEST_CASE("rigid motions") {
  const RigidMotion quarter{kPi / 2.0, {0, 0}};
  const LineCoords l = apply_rigid_motion(LineCoords{0.0, 1.0}, quarter);
  CHECK(l.theta == doctest::Approx(kPi / 2.0));
  CHECK(l.offset == doctest::Approx(1.0));

  const Primitive moved = apply_rigid_motion(Primitive{Circle{{1, 2}, 0.5}}, RigidMotion{0.0, {0.25, -1.0}});
  CHECK(std::get<Circle>(moved).center.x == doctest::Approx(1.25));
  CHECK(std::get<Circle>(moved).center.y == doctest::Approx(1.0));

  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int i = 0; i < 1000; ++i) {
    const RigidMotion g{u(rng) * 3.0, {u(rng), u(rng)}};
    const Primitive s = Segment{{u(rng), u(rng)}, {u(rng), u(rng)}};
    const Primitive a = Arc{{u(rng), u(rng)}, 0.5, u(rng), 2.0};
    const LineCoords line = normalize_line(u(rng), u(rng));

    const auto back = std::get<Segment>(apply_rigid_motion(apply_rigid_motion(s, g), g.inverse()));
    CHECK(norm(back.p0 - std::get<Segment>(s).p0) < 1e-12);
    CHECK(norm(back.p1 - std::get<Segment>(s).p1) < 1e-12);

    const LineCoords gl = apply_rigid_motion(line, g);
    for (const Primitive& prim : {s, a}) {
      const auto before = intersect_line_primitive(line, prim);
      const auto after = intersect_line_primitive(gl, apply_rigid_motion(prim, g));
      if (before.degenerate || after.degenerate) continue;
      CHECK(before.count == after.count);
    }
  }
}
