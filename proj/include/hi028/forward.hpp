#pragma once

#include <string>
#include <vector>

#include "hi028/tangents.hpp"

namespace hi028::hirotaka {

using exactnum::AlgNum;
using exactnum::Rational;
using geom::Circle;
using geom::Line;
using geom::Point;

/// The HI-028 figure: two perpendicular lines (placed as the coordinate axes)
/// with circle c of radius r in the upper-left corner region and circle c'
/// of radius r' in the upper-right, each tangent to both axes.
///
///   A = (0,0)   corner            G = (-r, r)    center of c
///   F = (-r,0), H = (0,r)         axis tangency points of c
///   C = (r',0), E = (0,r')        axis tangency points of c'
///   D = (r',r')                   center of c'
///
/// The chord lines EF and HC recut the circles at J, L (on EF) and I, M
/// (on HC); K is the chords' crossing.  IJ and LM close the figure as the
/// second external and second internal common tangent.
struct ForwardConfig {
  Rational r;
  Rational r_prime;
  Circle circle_c;
  Circle circle_c_prime;
  Point A, C, E, F, H;
  Point I, J, K, L, M;
  Line axis_x, axis_y;
  Line line_EF, line_HC;
  Line tangent_IJ, tangent_LM;
};

inline ForwardConfig construct_forward(const Rational& r, const Rational& r_prime) {
  if (r.sign() <= 0 || r_prime.sign() <= 0)
    throw Error(ErrorCode::nonpositive_radius, "radii must be positive");
  if (r == r_prime)
    throw Error(ErrorCode::equal_radii_degenerate,
                "equal radii collapse the second external tangent");

  AlgNum ar(r), arp(r_prime);
  Circle c({-ar, ar}, ar);
  Circle cp({arp, arp}, arp);

  Point A{AlgNum(0), AlgNum(0)};
  Point C{arp, AlgNum(0)};
  Point E{AlgNum(0), arp};
  Point F{-ar, AlgNum(0)};
  Point H{AlgNum(0), ar};

  Line line_EF = geom::line_through(E, F);
  Line line_HC = geom::line_through(H, C);

  Point J = geom::second_intersection(line_EF, cp, E);
  Point I = geom::second_intersection(line_HC, c, H);
  Point L = geom::second_intersection(line_EF, c, F);
  Point M = geom::second_intersection(line_HC, cp, C);
  auto K = geom::intersect(line_EF, line_HC);
  if (!K) throw std::logic_error("chord lines cannot be parallel");

  return ForwardConfig{
      r,
      r_prime,
      c,
      cp,
      A, C, E, F, H,
      I, J, *K, L, M,
      Line(AlgNum(0), AlgNum(1), AlgNum(0)),
      Line(AlgNum(1), AlgNum(0), AlgNum(0)),
      line_EF,
      line_HC,
      geom::line_through(I, J),
      geom::line_through(L, M),
  };
}

/// One flag per figure claim; all of them are exact predicates.
struct ClaimReport {
  bool parallel_IF_JC = false;
  bool perpendicular_IC_FJ = false;
  bool angle_at_K_right = false;
  bool inscribed_angles_45 = false;
  bool ij_is_external_tangent = false;
  bool lm_is_internal_tangent = false;
  bool lm_perpendicular_ij = false;
  bool quadruple_HCIM_collinear = false;
  bool quadruple_EFJL_collinear = false;
  bool quadruple_lines_perpendicular = false;

  bool all() const {
    return parallel_IF_JC && perpendicular_IC_FJ && angle_at_K_right && inscribed_angles_45 &&
           ij_is_external_tangent && lm_is_internal_tangent && lm_perpendicular_ij &&
           quadruple_HCIM_collinear && quadruple_EFJL_collinear && quadruple_lines_perpendicular;
  }

  std::vector<std::string> failed() const {
    std::vector<std::string> names;
    auto note = [&](bool ok, const char* name) {
      if (!ok) names.push_back(name);
    };
    note(parallel_IF_JC, "parallel_IF_JC");
    note(perpendicular_IC_FJ, "perpendicular_IC_FJ");
    note(angle_at_K_right, "angle_at_K_right");
    note(inscribed_angles_45, "inscribed_angles_45");
    note(ij_is_external_tangent, "ij_is_external_tangent");
    note(lm_is_internal_tangent, "lm_is_internal_tangent");
    note(lm_perpendicular_ij, "lm_perpendicular_ij");
    note(quadruple_HCIM_collinear, "quadruple_HCIM_collinear");
    note(quadruple_EFJL_collinear, "quadruple_EFJL_collinear");
    note(quadruple_lines_perpendicular, "quadruple_lines_perpendicular");
    return names;
  }
};

/// 45 degrees, exactly: |u.v| == |u x v| with both nonzero.
inline bool angle_is_45(const Point& vertex, const Point& toward1, const Point& toward2) {
  AlgNum d = geom::dot(toward1 - vertex, toward2 - vertex);
  AlgNum x = geom::cross(toward1 - vertex, toward2 - vertex);
  if (d.is_zero() || x.is_zero()) return false;
  return d * d == x * x;
}

inline ClaimReport verify_forward(const ForwardConfig& cfg) {
  ClaimReport rep;

  rep.parallel_IF_JC =
      geom::is_parallel(geom::line_through(cfg.I, cfg.F), geom::line_through(cfg.J, cfg.C));
  rep.perpendicular_IC_FJ =
      geom::is_perpendicular(geom::line_through(cfg.I, cfg.C), geom::line_through(cfg.F, cfg.J));
  rep.angle_at_K_right = geom::is_perpendicular(cfg.line_EF, cfg.line_HC);
  rep.inscribed_angles_45 =
      angle_is_45(cfg.J, cfg.E, cfg.C) && angle_is_45(cfg.I, cfg.H, cfg.F);

  const Circle& c = cfg.circle_c;
  const Circle& cp = cfg.circle_c_prime;
  rep.ij_is_external_tangent =
      geom::is_tangent(cfg.tangent_IJ, c) && geom::is_tangent(cfg.tangent_IJ, cp) &&
      geom::side_of(cfg.tangent_IJ, c.center) == geom::side_of(cfg.tangent_IJ, cp.center) &&
      geom::foot_of_perpendicular(c.center, cfg.tangent_IJ) == cfg.I &&
      geom::foot_of_perpendicular(cp.center, cfg.tangent_IJ) == cfg.J;
  rep.lm_is_internal_tangent =
      geom::is_tangent(cfg.tangent_LM, c) && geom::is_tangent(cfg.tangent_LM, cp) &&
      geom::side_of(cfg.tangent_LM, c.center) != geom::side_of(cfg.tangent_LM, cp.center) &&
      geom::foot_of_perpendicular(c.center, cfg.tangent_LM) == cfg.L &&
      geom::foot_of_perpendicular(cp.center, cfg.tangent_LM) == cfg.M;
  rep.lm_perpendicular_ij = geom::is_perpendicular(cfg.tangent_LM, cfg.tangent_IJ);

  rep.quadruple_HCIM_collinear =
      geom::collinear(cfg.H, cfg.C, cfg.I) && geom::collinear(cfg.H, cfg.C, cfg.M);
  rep.quadruple_EFJL_collinear =
      geom::collinear(cfg.E, cfg.F, cfg.J) && geom::collinear(cfg.E, cfg.F, cfg.L);
  rep.quadruple_lines_perpendicular = geom::is_perpendicular(
      geom::line_through(cfg.H, cfg.C), geom::line_through(cfg.E, cfg.F));

  return rep;
}

}  // namespace hi028::hirotaka
