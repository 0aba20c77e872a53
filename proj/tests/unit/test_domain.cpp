#include <cmath>
#include <random>

#include "buffon/domain.hpp"
#include "buffon/set.hpp"
#include "doctest.h"

using namespace buffon;

namespace {

// Chord of the disk |q - c| <= r along a line by solving the quadratic
// |foot + t dir - c|^2 = r^2 directly.
double quadratic_disk_chord(const LineCoords& line, Vec2 c, double r) {
  const Vec2 f = line.foot() - c;
  const Vec2 d = line.direction();
  const double b = dot(f, d);
  const double cc = dot(f, f) - r * r;
  const double disc = b * b - cc;
  return disc > 0.0 ? 2.0 * std::sqrt(disc) : 0.0;
}

// Chord length of a convex polygon by sampling the line finely and bisecting
// both boundary crossings.
double bisected_polygon_chord(const ConvexDomain& dom, const LineCoords& line) {
  const Vec2 o = line.foot();
  const Vec2 d = line.direction();
  const double span = 10.0;
  double first = NAN;
  for (int i = 0; i <= 20000; ++i) {
    const double t = -span + 2.0 * span * i / 20000.0;
    if (dom.contains(o + t * d, 0.0)) {
      first = t;
      break;
    }
  }
  if (std::isnan(first)) return 0.0;
  auto edge = [&](double inside, double outside) {
    for (int k = 0; k < 200; ++k) {
      const double mid = 0.5 * (inside + outside);
      (dom.contains(o + mid * d, 0.0) ? inside : outside) = mid;
    }
    return 0.5 * (inside + outside);
  };
  const double lo = edge(first, first - 2.0 * span / 20000.0);
  double last = first;
  while (last < span && dom.contains(o + (last + 1e-3) * d, 0.0)) last += 1e-3;
  const double hi = edge(last, last + 1e-3);
  return hi - lo;
}

}  // namespace

TEST_CASE("disk chord lengths") {
  const auto disk = ConvexDomain::disk();
  CHECK(disk.chord_length({0.3, 0.0}) == doctest::Approx(2.0));
  CHECK(disk.chord_length({0.3, 1.0}) == 0.0);
  CHECK(disk.chord_length({1.0, 0.46653}) == doctest::Approx(1.769).epsilon(1e-4));
  CHECK(disk.chord_length({1.0, -2.0}) == 0.0);
}

TEST_CASE("disk closed form agrees with the quadratic solve") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const Vec2 c{u(rng), u(rng)};
    const double r = 0.2 + std::abs(u(rng));
    const auto disk = ConvexDomain::disk(r, c);
    const LineCoords line = normalize_line(4.0 * u(rng), 2.0 * u(rng));
    CHECK(std::abs(disk.chord_length(line) - quadratic_disk_chord(line, c, r)) < 1e-12);
    const auto ch = disk.chord(line);
    if (ch) CHECK(std::abs(norm(ch->b - ch->a) - ch->length) < 1e-12);
  }
}

TEST_CASE("polygon chords against bisection") {
  const auto hex = ConvexDomain::polygon({{1, 0}, {0.5, 0.8}, {-0.5, 0.8}, {-1, 0}, {-0.5, -0.8}, {0.5, -0.8}});
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const LineCoords line = normalize_line(4.0 * u(rng), 0.9 * u(rng));
    CHECK(hex.chord_length(line) == doctest::Approx(bisected_polygon_chord(hex, line)).epsilon(1e-6));
  }
}

TEST_CASE("polygon validation") {
  CHECK_THROWS_AS(ConvexDomain::polygon({{0, 0}, {1, 0}}), std::invalid_argument);
  // Clockwise.
  CHECK_THROWS_AS(ConvexDomain::polygon({{0, 0}, {0, 1}, {1, 1}, {1, 0}}), std::invalid_argument);
  // Collinear vertex.
  CHECK_THROWS_AS(ConvexDomain::polygon({{0, 0}, {0.5, 0}, {1, 0}, {1, 1}, {0, 1}}), std::invalid_argument);
  // Reflex vertex.
  CHECK_THROWS_AS(ConvexDomain::polygon({{0, 0}, {2, 0}, {1, 0.5}, {2, 2}, {0, 2}}), std::invalid_argument);
}

TEST_CASE("domain metrics") {
  const auto disk = ConvexDomain::disk(1.0, {0.3, 0.4});
  CHECK(disk.area() == doctest::Approx(kPi));
  CHECK(disk.diameter() == doctest::Approx(2.0));
  CHECK(disk.circumradius() == doctest::Approx(1.5));

  const auto sq = ConvexDomain::square(1.0);
  CHECK(sq.area() == doctest::Approx(1.0));
  CHECK(sq.diameter() == doctest::Approx(std::sqrt(2.0)));
  CHECK(sq.circumradius() == doctest::Approx(std::sqrt(2.0)));

  const auto reu = ConvexDomain::reuleaux(1.0);
  CHECK(reu.area() == doctest::Approx((kPi - std::sqrt(3.0)) / 2.0).epsilon(1e-12));
  CHECK(reu.area() == doctest::Approx(0.70477).epsilon(1e-5));
  CHECK(reu.diameter() == doctest::Approx(1.0));
  CHECK(reu.circumradius() == doctest::Approx(1.0 / std::sqrt(3.0)));
}

TEST_CASE("Reuleaux chords have constant width") {
  const auto reu = ConvexDomain::reuleaux(1.0, {0.2, -0.1}, 0.4);
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ang(0.0, kPi);
  for (int i = 0; i < 200; ++i) {
    const double t = ang(rng);
    const auto s = reu.support(t);
    CHECK(s.hi - s.lo == doctest::Approx(1.0).epsilon(1e-12));
    // Chords near the support ends are short; the longest runs through a corner.
    CHECK(reu.chord_length({t, reu.chord_argmax(t)}) <= 1.0 + 1e-12);
    CHECK(reu.chord_length({t, s.hi + 1e-6}) == 0.0);
  }
  // An axis of symmetry through the corner at +y: chord runs corner to the opposite arc, length = width.
  const auto upright = ConvexDomain::reuleaux(1.0);
  CHECK(upright.chord_length({0.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("chord concavity in the offset") {
  const ConvexDomain domains[] = {ConvexDomain::disk(1.0, {0.1, 0.2}), ConvexDomain::square(1.0, {-0.5, -0.5}),
                                  ConvexDomain::reuleaux(1.2, {0.0, 0.1}, 0.3),
                                  ConvexDomain::polygon({{0, -1}, {1.2, 0}, {0.3, 0.9}, {-0.8, 0.4}})};
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (const auto& dom : domains) {
    for (int i = 0; i < 1000; ++i) {
      const double t = kPi * u01(rng);
      const auto s = dom.support(t);
      const double a = s.lo + (s.hi - s.lo) * u01(rng);
      const double b = s.lo + (s.hi - s.lo) * u01(rng);
      const double mid = dom.chord_length({t, 0.5 * (a + b)});
      CHECK(mid >= 0.5 * (dom.chord_length({t, a}) + dom.chord_length({t, b})) - 1e-9);
      CHECK(dom.chord_length({t, a}) <= dom.chord_length({t, dom.chord_argmax(t)}) + 1e-9);
    }
  }
}

TEST_CASE("chord profile matches chord_length") {
  const ConvexDomain domains[] = {ConvexDomain::disk(0.7, {0.1, 0.2}), ConvexDomain::square(1.0, {-0.5, -0.5}),
                                  ConvexDomain::reuleaux(1.0),
                                  ConvexDomain::polygon({{0, -1}, {1.2, 0}, {0.3, 0.9}, {-0.8, 0.4}})};
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (const auto& dom : domains) {
    for (int i = 0; i < 200; ++i) {
      const double t = std::abs(u(rng)) * kPi / 1.5;
      const ChordProfile profile(dom, t);
      for (int k = 0; k < 10; ++k) {
        const double p = u(rng);
        CHECK(std::abs(profile(p) - dom.chord_length({t, p})) < 1e-10);
      }
    }
  }
}

TEST_CASE("containment") {
  const auto sq = ConvexDomain::square(1.0);
  CHECK(sq.contains(Vec2{0.5, 0.5}));
  CHECK(sq.contains(Vec2{1.0, 1.0}));
  CHECK_FALSE(sq.contains(Vec2{1.1, 0.5}));
  CHECK(sq.contains(Primitive{Segment{{0, 0}, {1, 1}}}));
  CHECK_FALSE(sq.contains(Primitive{Circle{{0.5, 0.5}, 0.6}}));
  CHECK(sq.contains(Primitive{Circle{{0.5, 0.5}, 0.5}}));

  const auto disk = ConvexDomain::disk();
  // Arc bulging out of the disk only between its endpoints.
  CHECK_FALSE(disk.contains(Primitive{Arc{{0.5, 0}, 0.6, -0.5, 1.0}}));
  CHECK(disk.contains(Primitive{Arc{{0.5, 0}, 0.6, 2.0, 2.0}}));
}

TEST_CASE("rigid motions act on domains and chords") {
  std::mt19937_64 rng(14);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const ConvexDomain domains[] = {ConvexDomain::disk(), ConvexDomain::square(1.0), ConvexDomain::reuleaux(1.0)};
  for (const auto& dom : domains) {
    for (int i = 0; i < 1000; ++i) {
      const RigidMotion g{3.0 * u(rng), {u(rng), u(rng)}};
      const auto moved = apply_rigid_motion(dom, g);
      const LineCoords line = normalize_line(4.0 * u(rng), u(rng));
      CHECK(std::abs(moved.chord_length(apply_rigid_motion(line, g)) - dom.chord_length(line)) < 1e-9);
      CHECK(moved.area() == doctest::Approx(dom.area()).epsilon(1e-12));
    }
  }
}
