#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hi028/algnum.hpp"

namespace hi028::geom {

using exactnum::AlgNum;
using exactnum::Rational;

struct Point {
  AlgNum x;
  AlgNum y;
};

inline bool operator==(const Point& lhs, const Point& rhs) {
  return lhs.x == rhs.x && lhs.y == rhs.y;
}
inline bool operator!=(const Point& lhs, const Point& rhs) { return !(lhs == rhs); }

/// Lexicographic (x, then y); used wherever point lists need a stable order.
inline int compare(const Point& lhs, const Point& rhs) {
  int cx = exactnum::compare(lhs.x, rhs.x);
  if (cx != 0) return cx;
  return exactnum::compare(lhs.y, rhs.y);
}

// Points double as displacement vectors.
inline Point operator-(const Point& lhs, const Point& rhs) { return {lhs.x - rhs.x, lhs.y - rhs.y}; }
inline Point operator+(const Point& lhs, const Point& rhs) { return {lhs.x + rhs.x, lhs.y + rhs.y}; }
inline Point operator*(const AlgNum& scale, const Point& p) { return {scale * p.x, scale * p.y}; }

inline AlgNum dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline AlgNum cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline AlgNum dist_squared(const Point& p, const Point& q) { return dot(p - q, p - q); }

/// a*x + b*y + c = 0 in canonical scale: the first nonzero of (a, b) is 1, so
/// equal lines have equal coefficient triples.
class Line {
 public:
  Line(AlgNum a, AlgNum b, AlgNum c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
    if (!a_.is_zero()) {
      AlgNum inv = AlgNum(1) / a_;
      a_ = AlgNum(1);
      b_ = b_ * inv;
      c_ = c_ * inv;
    } else if (!b_.is_zero()) {
      AlgNum inv = AlgNum(1) / b_;
      b_ = AlgNum(1);
      c_ = c_ * inv;
    } else {
      throw Error(ErrorCode::degenerate_line, "both line coefficients vanish");
    }
  }

  const AlgNum& a() const { return a_; }
  const AlgNum& b() const { return b_; }
  const AlgNum& c() const { return c_; }

  AlgNum eval(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
  Point normal() const { return {a_, b_}; }
  Point direction() const { return {b_, -a_}; }

 private:
  AlgNum a_;
  AlgNum b_;
  AlgNum c_;
};

inline bool operator==(const Line& lhs, const Line& rhs) {
  return lhs.a() == rhs.a() && lhs.b() == rhs.b() && lhs.c() == rhs.c();
}
inline bool operator!=(const Line& lhs, const Line& rhs) { return !(lhs == rhs); }

inline int compare(const Line& lhs, const Line& rhs) {
  int c = exactnum::compare(lhs.a(), rhs.a());
  if (c != 0) return c;
  c = exactnum::compare(lhs.b(), rhs.b());
  if (c != 0) return c;
  return exactnum::compare(lhs.c(), rhs.c());
}

struct Circle {
  Point center;
  AlgNum radius;

  Circle(Point center_, AlgNum radius_) : center(std::move(center_)), radius(std::move(radius_)) {
    if (radius.sign() <= 0) throw Error(ErrorCode::nonpositive_radius);
  }
};

inline bool operator==(const Circle& lhs, const Circle& rhs) {
  return lhs.center == rhs.center && lhs.radius == rhs.radius;
}

inline Line line_through(const Point& p, const Point& q) {
  if (p == q) throw Error(ErrorCode::coincident_points, "line through equal points");
  Point d = q - p;
  return Line(d.y, -d.x, d.x * p.y - d.y * p.x);
}

inline bool on_line(const Point& p, const Line& l) { return l.eval(p).is_zero(); }

/// Sign of a*x + b*y + c; canonical scaling makes it a stable orientation.
inline int side_of(const Line& l, const Point& p) { return l.eval(p).sign(); }

inline bool is_parallel(const Line& l1, const Line& l2) {
  return (l1.a() * l2.b() - l2.a() * l1.b()).is_zero();
}

inline bool is_perpendicular(const Line& l1, const Line& l2) {
  return (l1.a() * l2.a() + l1.b() * l2.b()).is_zero();
}

inline bool collinear(const Point& p, const Point& q, const Point& r) {
  return cross(q - p, r - p).is_zero();
}

inline bool on_circle(const Point& p, const Circle& c) {
  return dist_squared(p, c.center) == c.radius * c.radius;
}

/// Tangency without radicals: dist(center, line)^2 == r^2, cross-multiplied.
inline bool is_tangent(const Line& l, const Circle& c) {
  AlgNum e = l.eval(c.center);
  AlgNum n2 = l.a() * l.a() + l.b() * l.b();
  return e * e == c.radius * c.radius * n2;
}

inline std::optional<Point> intersect(const Line& l1, const Line& l2) {
  AlgNum det = l1.a() * l2.b() - l2.a() * l1.b();
  if (det.is_zero()) return std::nullopt;
  AlgNum x = (l1.b() * l2.c() - l2.b() * l1.c()) / det;
  AlgNum y = (l2.a() * l1.c() - l1.a() * l2.c()) / det;
  return Point{std::move(x), std::move(y)};
}

inline Point foot_of_perpendicular(const Point& p, const Line& l) {
  AlgNum t = l.eval(p) / (l.a() * l.a() + l.b() * l.b());
  return {p.x - t * l.a(), p.y - t * l.b()};
}

inline Point reflect(const Point& p, const Line& l) {
  AlgNum t = l.eval(p) / (l.a() * l.a() + l.b() * l.b());
  AlgNum two_t = AlgNum(2) * t;
  return {p.x - two_t * l.a(), p.y - two_t * l.b()};
}

inline Line reflect_line(const Line& l, const Line& axis) {
  Point p = l.b().is_zero() ? Point{-(l.c() / l.a()), AlgNum(0)}
                            : Point{AlgNum(0), -(l.c() / l.b())};
  Point q = p + l.direction();
  return line_through(reflect(p, axis), reflect(q, axis));
}

inline Point homothety(const Point& p, const Point& center, const AlgNum& ratio) {
  if (ratio.is_zero()) throw Error(ErrorCode::zero_ratio);
  return center + ratio * (p - center);
}

/// 0, 1 or 2 points, lexicographically sorted.  The chord half-length enters
/// through a single square root, so rational data stays radical-poor; an
/// intersection that needs a deeper nesting than the field can hold throws
/// RADICAND_OVERFLOW.
inline std::vector<Point> line_circle_intersections(const Line& l, const Circle& c) {
  AlgNum n2 = l.a() * l.a() + l.b() * l.b();
  AlgNum e = l.eval(c.center);
  AlgNum disc = c.radius * c.radius - e * e / n2;  // squared distance from foot to crossing
  int s = disc.sign();
  if (s < 0) return {};
  Point foot = foot_of_perpendicular(c.center, l);
  if (s == 0) return {foot};
  std::optional<AlgNum> h = exactnum::try_sqrt(disc / n2);
  if (!h)
    throw Error(ErrorCode::radicand_overflow, "intersection leaves the representable field");
  Point offset{*h * l.b(), -(*h * l.a())};
  Point p1 = foot + offset;
  Point p2 = foot - offset;
  if (compare(p2, p1) < 0) std::swap(p1, p2);
  return {p1, p2};
}

/// Vieta exit from a known intersection: the parametric quadratic along the
/// line has the known root, so the other comes out by a division and no new
/// radical ever appears.  Tangency returns `known` itself.
inline Point second_intersection(const Line& l, const Circle& c, const Point& known) {
  if (!on_line(known, l) || !on_circle(known, c))
    throw Error(ErrorCode::point_not_incident, "known point must lie on the line and the circle");
  Point dir = l.direction();
  Point w = known - c.center;
  AlgNum t = (AlgNum(-2) * dot(dir, w)) / dot(dir, dir);
  if (t.is_zero()) return known;
  return known + t * dir;
}

enum class PairClass {
  separate,
  externally_tangent,
  overlapping,
  internally_tangent,
  contained,
};

inline PairClass classify_pair(const Circle& c1, const Circle& c2) {
  AlgNum d2 = dist_squared(c1.center, c2.center);
  AlgNum sum = c1.radius + c2.radius;
  AlgNum diff = c1.radius - c2.radius;
  int vs_sum = compare(d2, sum * sum);
  if (vs_sum > 0) return PairClass::separate;
  if (vs_sum == 0) return PairClass::externally_tangent;
  int vs_diff = compare(d2, diff * diff);
  if (vs_diff > 0) return PairClass::overlapping;
  if (vs_diff == 0 && !d2.is_zero()) return PairClass::internally_tangent;
  return PairClass::contained;
}

}  // namespace hi028::geom
