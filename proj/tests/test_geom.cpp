#include <catch2/catch_amalgamated.hpp>

#include "hi028/geom.hpp"
#include "oracles.hpp"

using hi028::Error;
using hi028::ErrorCode;
using namespace hi028::exactnum;
using namespace hi028::geom;

namespace {

Point pt(int x, int y) { return {AlgNum(x), AlgNum(y)}; }
Point pt(Rational x, Rational y) { return {AlgNum(x), AlgNum(y)}; }

bool throws_code(ErrorCode code, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("lines are stored canonically") {
  Line l1(AlgNum(2), AlgNum(-4), AlgNum(6));
  Line l2(AlgNum(-1), AlgNum(2), AlgNum(-3));
  CHECK(l1 == l2);
  CHECK(l1.a() == AlgNum(1));
  CHECK(l1.b() == AlgNum(-2));
  CHECK(l1.c() == AlgNum(3));
  // vertical line scales on b
  Line v(AlgNum(0), AlgNum(-5), AlgNum(10));
  CHECK(v.a() == AlgNum(0));
  CHECK(v.b() == AlgNum(1));
  CHECK(v.c() == AlgNum(-2));
  CHECK(throws_code(ErrorCode::degenerate_line, [] { Line(AlgNum(0), AlgNum(0), AlgNum(1)); }));
}

TEST_CASE("line through two points, incidence, sides") {
  Line l = line_through(pt(0, 1), pt(2, 5));  // y = 2x+1
  CHECK(on_line(pt(1, 3), l));
  CHECK(!on_line(pt(1, 4), l));
  CHECK(side_of(l, pt(0, 0)) * side_of(l, pt(0, 5)) == -1);
  CHECK(side_of(l, pt(1, 3)) == 0);
  CHECK(throws_code(ErrorCode::coincident_points, [] { line_through(pt(1, 1), pt(1, 1)); }));
}

TEST_CASE("parallel and perpendicular predicates") {
  Line l = line_through(pt(0, 0), pt(3, 1));
  Line m = line_through(pt(0, 4), pt(6, 6));
  Line n = line_through(pt(0, 0), pt(-1, 3));
  CHECK(is_parallel(l, m));
  CHECK(!is_parallel(l, n));
  CHECK(is_perpendicular(l, n));
  CHECK(!is_perpendicular(l, m));
  // with irrational slope: direction (1, sqrt2) vs (-sqrt2, 1)
  AlgNum s2 = sqrt_rational(Rational(2));
  Line p = line_through(pt(0, 0), Point{AlgNum(1), s2});
  Line q = line_through(pt(0, 0), Point{-s2, AlgNum(1)});
  CHECK(is_perpendicular(p, q));
}

TEST_CASE("collinearity") {
  CHECK(collinear(pt(0, 0), pt(2, 1), pt(6, 3)));
  CHECK(!collinear(pt(0, 0), pt(2, 1), pt(6, 4)));
  CHECK(collinear(pt(1, 1), pt(1, 1), pt(6, 4)));  // repeated point is degenerate-true
}

TEST_CASE("intersection by Cramer") {
  Line l = line_through(pt(0, 0), pt(1, 1));
  Line m = line_through(pt(0, 4), pt(4, 0));
  auto x = intersect(l, m);
  REQUIRE(x.has_value());
  CHECK(*x == pt(2, 2));
  CHECK(!intersect(l, line_through(pt(0, 1), pt(1, 2))).has_value());
}

TEST_CASE("foot of perpendicular and reflections") {
  Line l = line_through(pt(0, 0), pt(1, 1));
  Point p = pt(3, 1);
  Point f = foot_of_perpendicular(p, l);
  CHECK(f == pt(2, 2));
  CHECK(reflect(p, l) == pt(1, 3));
  Point on = pt(5, 5);
  CHECK(reflect(on, l) == on);
  // reflecting a line: x-axis across y=x gives the y-axis
  Line xaxis = line_through(pt(0, 0), pt(1, 0));
  Line yaxis = line_through(pt(0, 0), pt(0, 1));
  CHECK(reflect_line(xaxis, l) == yaxis);
}

TEST_CASE("homothety scales distances by the ratio") {
  Point center = pt(1, 1);
  Point p = pt(3, 5);
  Point q = homothety(p, center, AlgNum(Rational(-1, 2)));
  CHECK(q == pt(0, -1));
  CHECK(dist_squared(center, q) * AlgNum(4) == dist_squared(center, p));
  CHECK(throws_code(ErrorCode::zero_ratio, [&] { homothety(p, center, AlgNum(0)); }));
}

TEST_CASE("circle construction guards") {
  CHECK(throws_code(ErrorCode::nonpositive_radius, [] { Circle(pt(0, 0), AlgNum(0)); }));
  CHECK(throws_code(ErrorCode::nonpositive_radius, [] { Circle(pt(0, 0), AlgNum(-2)); }));
}

TEST_CASE("tangency is the squared-distance predicate") {
  Circle c(pt(0, 0), AlgNum(5));
  CHECK(is_tangent(line_through(pt(5, 0), pt(5, 1)), c));
  CHECK(is_tangent(Line(AlgNum(3), AlgNum(4), AlgNum(-25)), c));
  CHECK(!is_tangent(Line(AlgNum(3), AlgNum(4), AlgNum(-24)), c));
  // tangent with irrational offset: x + y = 5*sqrt(2)
  AlgNum s2 = sqrt_rational(Rational(2));
  CHECK(is_tangent(Line(AlgNum(1), AlgNum(1), AlgNum(-5) * s2), c));
}

TEST_CASE("line-circle intersections, ordered") {
  Circle c(pt(0, 0), AlgNum(5));
  auto pts = line_circle_intersections(line_through(pt(-10, 3), pt(10, 3)), c);
  REQUIRE(pts.size() == 2);
  CHECK(pts[0] == pt(-4, 3));
  CHECK(pts[1] == pt(4, 3));

  auto tang = line_circle_intersections(line_through(pt(5, -1), pt(5, 1)), c);
  REQUIRE(tang.size() == 1);
  CHECK(tang[0] == pt(5, 0));

  CHECK(line_circle_intersections(line_through(pt(6, 0), pt(6, 1)), c).empty());

  // irrational chord: y = x meets x^2+y^2=25 at (+-5/sqrt2, ...)
  auto diag = line_circle_intersections(line_through(pt(0, 0), pt(1, 1)), c);
  REQUIRE(diag.size() == 2);
  AlgNum h = sqrt_rational(Rational(25, 2));
  CHECK(diag[0] == Point{-h, -h});
  CHECK(diag[1] == Point{h, h});
}

TEST_CASE("second intersection avoids radicals via Vieta") {
  Circle c(pt(0, 0), AlgNum(5));
  Line l = line_through(pt(-4, 3), pt(0, 5));  // slope 1/2 chord
  Point other = second_intersection(l, c, pt(-4, 3));
  CHECK(on_circle(other, c));
  CHECK(on_line(other, l));
  CHECK(!(other == pt(-4, 3)));
  // cross-check against the independent quadratic oracle
  auto rp = oracle::chord_other_end(Rational(0), Rational(0), Rational(5), Rational(1, 2),
                                    Rational(5), Rational(-4));
  CHECK(other == pt(rp.x, rp.y));
  // tangent point maps to itself
  Point t = pt(5, 0);
  CHECK(second_intersection(line_through(pt(5, -1), pt(5, 1)), c, t) == t);
  CHECK(throws_code(ErrorCode::point_not_incident,
                    [&] { second_intersection(l, c, pt(0, 0)); }));
  CHECK(throws_code(ErrorCode::point_not_incident,
                    [&] { second_intersection(l, c, pt(3, 4)); }));  // on circle, off line
}

TEST_CASE("pair classification covers all five regimes") {
  auto mk = [](int x, int r) { return Circle(pt(x, 0), AlgNum(r)); };
  CHECK(classify_pair(mk(0, 1), mk(10, 2)) == PairClass::separate);
  CHECK(classify_pair(mk(0, 1), mk(3, 2)) == PairClass::externally_tangent);
  CHECK(classify_pair(mk(0, 2), mk(3, 2)) == PairClass::overlapping);
  CHECK(classify_pair(mk(0, 1), mk(1, 2)) == PairClass::internally_tangent);
  CHECK(classify_pair(mk(0, 1), mk(0, 3)) == PairClass::contained);
  // irrational center distance: d = sqrt(10), radii 1 and 2, d > 3 so separate
  Circle a(pt(0, 0), AlgNum(1));
  Circle b(pt(1, 3), AlgNum(2));
  CHECK(classify_pair(a, b) == PairClass::separate);
}

TEST_CASE("point ordering is lexicographic") {
  CHECK(compare(pt(0, 1), pt(1, 0)) < 0);
  CHECK(compare(pt(1, 0), pt(1, 1)) < 0);
  CHECK(compare(pt(1, 1), pt(1, 1)) == 0);
  AlgNum s2 = sqrt_rational(Rational(2));
  CHECK(compare(Point{s2, AlgNum(0)}, pt(Rational(3, 2), Rational(0))) < 0);  // sqrt2 < 1.5
}
