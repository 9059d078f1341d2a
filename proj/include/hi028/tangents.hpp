#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "hi028/geom.hpp"

namespace hi028::geom {

enum class TangentKind { external, internal };

/// A common tangent with its two points of tangency, one per circle.
struct TangencyWitness {
  Line line;
  Point on_first;
  Point on_second;
  TangentKind kind;
};

struct CommonTangents {
  std::vector<TangencyWitness> external;
  std::vector<TangencyWitness> internal;
};

namespace detail {

/// Both tangent lines through an outside point X.  With v = center - X,
/// q = |v|^2 and T = sqrt(q - r^2), a normal vector of a tangent line through
/// X must satisfy (n.v)^2 = r^2 |n|^2; writing n in the (v, v_perp) frame
/// gives n = r*v +/- T*v_perp, and line canonicalisation scrubs the shared
/// irrational factors out of the coefficients.
inline std::array<Line, 2> tangents_from_point(const Point& x, const Circle& circle) {
  Point v = circle.center - x;
  AlgNum q = dot(v, v);
  AlgNum t_sq = q - circle.radius * circle.radius;
  if (t_sq.sign() <= 0)
    throw Error(ErrorCode::not_separate, "tangent pencil point is not outside the circle");
  std::optional<AlgNum> t = exactnum::try_sqrt(t_sq);
  if (!t) throw Error(ErrorCode::radicand_overflow, "tangent direction leaves the field");
  Point v_perp{-v.y, v.x};
  Point n_plus = circle.radius * v + *t * v_perp;
  Point n_minus = circle.radius * v - *t * v_perp;
  return {Line(n_plus.x, n_plus.y, -dot(n_plus, x)),
          Line(n_minus.x, n_minus.y, -dot(n_minus, x))};
}

inline TangencyWitness make_witness(const Line& line, const Circle& c1, const Circle& c2,
                                    TangentKind kind) {
  return {line, foot_of_perpendicular(c1.center, line), foot_of_perpendicular(c2.center, line),
          kind};
}

}  // namespace detail

/// All four common tangents of two separate circles, exactly.  External lines
/// leave both centers on one side, internal lines separate them; each list is
/// sorted by canonical line coefficients so output order is reproducible.
inline CommonTangents common_tangents(const Circle& c1, const Circle& c2) {
  if (classify_pair(c1, c2) != PairClass::separate)
    throw Error(ErrorCode::not_separate, "circles must be disjoint and exterior");

  CommonTangents out;
  const AlgNum& r1 = c1.radius;
  const AlgNum& r2 = c2.radius;

  if (r1 == r2) {
    // External tangents are parallel to the center line; the centers are at
    // distance r on the same side, so a*x + b*y - n.center1 -/+ r*|n| = 0 with
    // n the center-line normal.
    Point v = c2.center - c1.center;
    Point n{-v.y, v.x};
    AlgNum n2 = dot(n, n);
    std::optional<AlgNum> len = exactnum::try_sqrt(n2);
    if (!len) throw Error(ErrorCode::radicand_overflow, "center distance leaves the field");
    AlgNum base = dot(n, c1.center);
    for (int s : {1, -1}) {
      Line line(n.x, n.y, -(base + AlgNum(s) * r1 * *len));
      out.external.push_back(detail::make_witness(line, c1, c2, TangentKind::external));
    }
  } else {
    AlgNum denom = r2 - r1;
    Point x_ext{(r2 * c1.center.x - r1 * c2.center.x) / denom,
                (r2 * c1.center.y - r1 * c2.center.y) / denom};
    for (const Line& line : detail::tangents_from_point(x_ext, c1))
      out.external.push_back(detail::make_witness(line, c1, c2, TangentKind::external));
  }

  AlgNum sum = r1 + r2;
  Point x_int{(r2 * c1.center.x + r1 * c2.center.x) / sum,
              (r2 * c1.center.y + r1 * c2.center.y) / sum};
  for (const Line& line : detail::tangents_from_point(x_int, c1))
    out.internal.push_back(detail::make_witness(line, c1, c2, TangentKind::internal));

  auto order = [](const TangencyWitness& lhs, const TangencyWitness& rhs) {
    return compare(lhs.line, rhs.line) < 0;
  };
  std::sort(out.external.begin(), out.external.end(), order);
  std::sort(out.internal.begin(), out.internal.end(), order);

  for (const TangencyWitness& w : out.external) {
    if (!is_tangent(w.line, c1) || !is_tangent(w.line, c2) ||
        side_of(w.line, c1.center) != side_of(w.line, c2.center))
      throw std::logic_error("external tangent failed its own certificate");
  }
  for (const TangencyWitness& w : out.internal) {
    if (!is_tangent(w.line, c1) || !is_tangent(w.line, c2) ||
        side_of(w.line, c1.center) == side_of(w.line, c2.center))
      throw std::logic_error("internal tangent failed its own certificate");
  }
  return out;
}

}  // namespace hi028::geom
