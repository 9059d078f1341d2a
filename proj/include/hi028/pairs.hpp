#pragma once

#include <array>
#include <optional>
#include <utility>

#include "hi028/tangents.hpp"

namespace hi028::hirotaka {

using exactnum::AlgNum;
using exactnum::Rational;
using geom::Circle;
using geom::CommonTangents;
using geom::Line;
using geom::Point;

/// Two disjoint exterior circles plus their four common tangents.
///
/// With a rational center distance the circles sit at (0,0) and (d,0).  When
/// only d^2 is rational the whole figure is instead scaled by d: centers
/// (0,0) and (d^2, 0), radii r_i * sqrt(d^2).  Every predicate this module
/// evaluates is similarity-invariant, and the scaled frame keeps all tangent
/// data inside one biquadratic field.
struct CirclePair {
  Rational r1;
  Rational r2;
  Rational d_squared;
  bool scaled_frame;
  Circle circle1;
  Circle circle2;
  CommonTangents tangents;
};

inline CirclePair make_pair_d_squared(const Rational& r1, const Rational& r2,
                                      const Rational& d_squared) {
  if (r1.sign() <= 0 || r2.sign() <= 0)
    throw Error(ErrorCode::nonpositive_radius, "radii must be positive");
  if (d_squared.sign() <= 0)
    throw Error(ErrorCode::nonpositive_input, "squared center distance must be positive");
  Rational sum = r1 + r2;
  if (d_squared <= sum * sum)
    throw Error(ErrorCode::not_separate, "circles must be disjoint and exterior");

  AlgNum d = exactnum::sqrt_rational(d_squared);
  if (d.is_rational()) {
    Circle c1({AlgNum(0), AlgNum(0)}, AlgNum(r1));
    Circle c2({d, AlgNum(0)}, AlgNum(r2));
    CommonTangents tangents = geom::common_tangents(c1, c2);
    return CirclePair{r1, r2, d_squared, false, std::move(c1), std::move(c2),
                      std::move(tangents)};
  }
  Circle c1({AlgNum(0), AlgNum(0)}, AlgNum(r1) * d);
  Circle c2({AlgNum(d_squared), AlgNum(0)}, AlgNum(r2) * d);
  CommonTangents tangents = geom::common_tangents(c1, c2);
  return CirclePair{r1, r2, d_squared, true, std::move(c1), std::move(c2), std::move(tangents)};
}

inline CirclePair make_pair(const Rational& r1, const Rational& r2, const Rational& d) {
  if (d.sign() <= 0) throw Error(ErrorCode::nonpositive_input, "center distance must be positive");
  return make_pair_d_squared(r1, r2, d * d);
}

inline bool criterion_check_d_squared(const Rational& r1, const Rational& r2,
                                      const Rational& d_squared) {
  return d_squared == 2 * (r1 * r1 + r2 * r2);
}

inline bool criterion_check(const Rational& r1, const Rational& r2, const Rational& d) {
  return criterion_check_d_squared(r1, r2, d * d);
}

inline bool criterion_check(const CirclePair& pair) {
  return criterion_check_d_squared(pair.r1, pair.r2, pair.d_squared);
}

/// The chord joining a circle's two external tangency points is parallel to
/// the matching chord on the other circle, and likewise for the internal
/// points (all four chords are perpendicular to the center line).
inline bool parallel_chords_check(const CirclePair& pair) {
  const auto& ext = pair.tangents.external;
  const auto& intr = pair.tangents.internal;
  Line ext1 = geom::line_through(ext[0].on_first, ext[1].on_first);
  Line ext2 = geom::line_through(ext[0].on_second, ext[1].on_second);
  Line int1 = geom::line_through(intr[0].on_first, intr[1].on_first);
  Line int2 = geom::line_through(intr[0].on_second, intr[1].on_second);
  return geom::is_parallel(ext1, ext2) && geom::is_parallel(int1, int2);
}

namespace detail {

inline bool four_collinear(const Point& p0, const Point& p1, const Point& p2, const Point& p3) {
  return geom::collinear(p0, p1, p2) && geom::collinear(p0, p1, p3);
}

/// The eight ways to split the eight tangency points into two quadruples that
/// take exactly one point from each tangent line (complementary splits count
/// once: the first line's choice is pinned).
struct QuadrupleSplit {
  std::array<Point, 4> first;
  std::array<Point, 4> second;
};

inline QuadrupleSplit split_points(const CommonTangents& t, int selector) {
  const geom::TangencyWitness* lines[4] = {&t.external[0], &t.external[1], &t.internal[0],
                                           &t.internal[1]};
  QuadrupleSplit out{};
  for (int i = 0; i < 4; ++i) {
    bool swap = i > 0 && ((selector >> (i - 1)) & 1) != 0;
    out.first[i] = swap ? lines[i]->on_second : lines[i]->on_first;
    out.second[i] = swap ? lines[i]->on_first : lines[i]->on_second;
  }
  return out;
}

}  // namespace detail

/// True when the eight tangency points fall onto two lines, one point from
/// each tangent per line.
inline bool collinearity_check(const CirclePair& pair) {
  for (int selector = 0; selector < 8; ++selector) {
    auto [first, second] = detail::split_points(pair.tangents, selector);
    if (detail::four_collinear(first[0], first[1], first[2], first[3]) &&
        detail::four_collinear(second[0], second[1], second[2], second[3]))
      return true;
  }
  return false;
}

struct QuadrupleLines {
  Line first;
  Line second;
};

/// The two lines realising the collinear split, when one exists.
inline std::optional<QuadrupleLines> collinear_quadruple_lines(const CirclePair& pair) {
  for (int selector = 0; selector < 8; ++selector) {
    auto [first, second] = detail::split_points(pair.tangents, selector);
    if (detail::four_collinear(first[0], first[1], first[2], first[3]) &&
        detail::four_collinear(second[0], second[1], second[2], second[3]))
      return QuadrupleLines{geom::line_through(first[0], first[1]),
                            geom::line_through(second[0], second[1])};
  }
  return std::nullopt;
}

/// True when the internal tangents match up with the external ones so that
/// the matched lines are perpendicular two by two.
inline bool perpendicularity_check(const CirclePair& pair) {
  const Line& e0 = pair.tangents.external[0].line;
  const Line& e1 = pair.tangents.external[1].line;
  const Line& i0 = pair.tangents.internal[0].line;
  const Line& i1 = pair.tangents.internal[1].line;
  return (geom::is_perpendicular(i0, e0) && geom::is_perpendicular(i1, e1)) ||
         (geom::is_perpendicular(i0, e1) && geom::is_perpendicular(i1, e0));
}

/// The three faces of the equivalence, evaluated independently, plus the
/// bonus fact that collinear quadruple lines are perpendicular to each other.
struct EquivalenceReport {
  bool collinear_quadruples = false;
  bool tangent_pairs_perpendicular = false;
  bool criterion_d2_eq_2r2 = false;
  std::optional<bool> lines_perpendicular_when_collinear;
  bool consistent = false;
};

inline EquivalenceReport equivalence_check(const CirclePair& pair) {
  EquivalenceReport rep;
  rep.collinear_quadruples = collinearity_check(pair);
  rep.tangent_pairs_perpendicular = perpendicularity_check(pair);
  rep.criterion_d2_eq_2r2 = criterion_check(pair);
  if (rep.collinear_quadruples) {
    auto lines = collinear_quadruple_lines(pair);
    rep.lines_perpendicular_when_collinear =
        lines && geom::is_perpendicular(lines->first, lines->second);
  }
  rep.consistent = rep.collinear_quadruples == rep.tangent_pairs_perpendicular &&
                   rep.collinear_quadruples == rep.criterion_d2_eq_2r2 &&
                   (!rep.collinear_quadruples || *rep.lines_perpendicular_when_collinear);
  return rep;
}

}  // namespace hi028::hirotaka
