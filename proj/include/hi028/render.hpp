#pragma once

#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "hi028/forward.hpp"
#include "hi028/pairs.hpp"

namespace hi028::render {

using exactnum::AlgNum;
using exactnum::Rational;
using geom::Circle;
using geom::Line;
using geom::Point;

struct RenderOptions {
  int canvas_size = 800;
  Rational margin = Rational(1, 10);  // fraction of the canvas left blank per side
  int decimal_digits = 8;
  bool show_labels = true;
  double stroke_width = 1.5;
};

namespace detail {

inline std::string format_stroke(double width) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%g", width);
  return buf;
}

/// Exact world-to-pixel mapping plus element collection.  Coordinates stay
/// AlgNum until the final decimal print, so two renders of one figure are
/// byte-identical.
class SvgCanvas {
 public:
  SvgCanvas(const Point& world_min, const Point& world_max, const RenderOptions& opt)
      : opt_(opt) {
    if (opt.canvas_size < 16) throw Error(ErrorCode::invalid_render_options, "canvas too small");
    if (opt.margin.sign() < 0 || opt.margin >= Rational(1, 2))
      throw Error(ErrorCode::invalid_render_options, "margin must lie in [0, 1/2)");
    if (opt.decimal_digits < 1 || opt.decimal_digits > 60)
      throw Error(ErrorCode::invalid_render_options, "decimal digits out of range");
    if (!(opt.stroke_width > 0))
      throw Error(ErrorCode::invalid_render_options, "stroke width must be positive");

    AlgNum dx = world_max.x - world_min.x;
    AlgNum dy = world_max.y - world_min.y;
    AlgNum extent = exactnum::compare(dx, dy) >= 0 ? dx : dy;
    if (extent.sign() <= 0) throw Error(ErrorCode::invalid_render_options, "empty figure");
    Rational usable = Rational(1) - 2 * opt.margin;
    scale_ = AlgNum(Rational(opt.canvas_size) * usable) / extent;
    center_ = {(world_min.x + world_max.x) / AlgNum(2), (world_min.y + world_max.y) / AlgNum(2)};
    // the square of world space the canvas actually shows
    AlgNum world_half = AlgNum(Rational(opt.canvas_size, 2)) / scale_;
    view_min_ = {center_.x - world_half, center_.y - world_half};
    view_max_ = {center_.x + world_half, center_.y + world_half};
  }

  AlgNum px(const AlgNum& x) const {
    return AlgNum(Rational(opt_.canvas_size, 2)) + (x - center_.x) * scale_;
  }
  AlgNum py(const AlgNum& y) const {
    return AlgNum(Rational(opt_.canvas_size, 2)) - (y - center_.y) * scale_;
  }
  std::string dec(const AlgNum& v) const { return exactnum::to_decimal(v, opt_.decimal_digits); }

  void add_circle(const Circle& c, const char* stroke) {
    body_ += "  <circle cx=\"" + dec(px(c.center.x)) + "\" cy=\"" + dec(py(c.center.y)) +
             "\" r=\"" + dec(c.radius * scale_) + "\" fill=\"none\" stroke=\"" + stroke +
             "\" stroke-width=\"" + format_stroke(opt_.stroke_width) + "\"/>\n";
  }

  /// Clips the infinite line to the viewport square (exact Liang-Barsky) and
  /// emits the visible segment; fully outside lines are dropped.
  void add_line(const Line& l, const char* stroke) {
    Point base = l.b().is_zero() ? Point{-(l.c() / l.a()), AlgNum(0)}
                                 : Point{AlgNum(0), -(l.c() / l.b())};
    Point dir = l.direction();
    bool bounded = false;
    AlgNum t_lo, t_hi;
    auto narrow = [&](const AlgNum& d, const AlgNum& base_v, const AlgNum& lo,
                      const AlgNum& hi) -> bool {
      if (d.is_zero())
        return exactnum::compare(base_v, lo) >= 0 && exactnum::compare(base_v, hi) <= 0;
      AlgNum t1 = (lo - base_v) / d;
      AlgNum t2 = (hi - base_v) / d;
      if (exactnum::compare(t1, t2) > 0) std::swap(t1, t2);
      if (!bounded) {
        t_lo = std::move(t1);
        t_hi = std::move(t2);
        bounded = true;
        return true;
      }
      if (exactnum::compare(t1, t_lo) > 0) t_lo = std::move(t1);
      if (exactnum::compare(t2, t_hi) < 0) t_hi = std::move(t2);
      return exactnum::compare(t_lo, t_hi) <= 0;
    };
    if (!narrow(dir.x, base.x, view_min_.x, view_max_.x)) return;
    if (!narrow(dir.y, base.y, view_min_.y, view_max_.y)) return;
    if (!bounded) return;
    Point p1 = base + t_lo * dir;
    Point p2 = base + t_hi * dir;
    body_ += "  <line x1=\"" + dec(px(p1.x)) + "\" y1=\"" + dec(py(p1.y)) + "\" x2=\"" +
             dec(px(p2.x)) + "\" y2=\"" + dec(py(p2.y)) + "\" stroke=\"" + stroke +
             "\" stroke-width=\"" + format_stroke(opt_.stroke_width) + "\"/>\n";
  }

  /// Markers are squares centered by a translate() so the exact pixel
  /// coordinates appear verbatim in the document.
  void add_marker(const Point& p) {
    body_ += "  <rect x=\"-3\" y=\"-3\" width=\"6\" height=\"6\" fill=\"#222222\" transform=\"translate(" +
             dec(px(p.x)) + " " + dec(py(p.y)) + ")\"/>\n";
  }

  void add_label(const Point& p, const std::string& text) {
    if (!opt_.show_labels) return;
    AlgNum lx = px(p.x) + AlgNum(6);
    AlgNum ly = py(p.y) - AlgNum(6);
    body_ += "  <text x=\"" + dec(lx) + "\" y=\"" + dec(ly) +
             "\" font-family=\"monospace\" font-size=\"14\" fill=\"#222222\">" + text +
             "</text>\n";
  }

  std::string finish() const {
    std::string n = std::to_string(opt_.canvas_size);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + n + "\" height=\"" + n +
           "\" viewBox=\"0 0 " + n + " " + n + "\">\n" + body_ + "</svg>\n";
  }

 private:
  RenderOptions opt_;
  AlgNum scale_;
  Point center_;
  Point view_min_;
  Point view_max_;
  std::string body_;
};

inline void grow(Point& mn, Point& mx, const Point& p) {
  if (exactnum::compare(p.x, mn.x) < 0) mn.x = p.x;
  if (exactnum::compare(p.y, mn.y) < 0) mn.y = p.y;
  if (exactnum::compare(p.x, mx.x) > 0) mx.x = p.x;
  if (exactnum::compare(p.y, mx.y) > 0) mx.y = p.y;
}

inline void grow_circle(Point& mn, Point& mx, const Circle& c) {
  grow(mn, mx, {c.center.x - c.radius, c.center.y - c.radius});
  grow(mn, mx, {c.center.x + c.radius, c.center.y + c.radius});
}

}  // namespace detail

/// The full figure: both circles, both axes, both chord lines, both closing
/// tangents, and the thirteen classical point labels A..M plus X, the apex
/// where the second external tangent meets the baseline.
inline std::string render_forward(const hirotaka::ForwardConfig& cfg,
                                  const RenderOptions& opt = {}) {
  const auto x_apex = geom::intersect(cfg.tangent_IJ, cfg.axis_x);
  if (!x_apex) throw std::logic_error("external tangents of unequal circles must meet");

  Point mn = cfg.A, mx = cfg.A;
  detail::grow_circle(mn, mx, cfg.circle_c);
  detail::grow_circle(mn, mx, cfg.circle_c_prime);
  for (const Point* p : {&cfg.C, &cfg.E, &cfg.F, &cfg.H, &cfg.I, &cfg.J, &cfg.K, &cfg.L, &cfg.M,
                         &*x_apex})
    detail::grow(mn, mx, *p);

  detail::SvgCanvas canvas(mn, mx, opt);
  canvas.add_circle(cfg.circle_c, "#1f77b4");
  canvas.add_circle(cfg.circle_c_prime, "#d62728");
  canvas.add_line(cfg.axis_x, "#999999");
  canvas.add_line(cfg.axis_y, "#999999");
  canvas.add_line(cfg.line_EF, "#2a9d8f");
  canvas.add_line(cfg.line_HC, "#2a9d8f");
  canvas.add_line(cfg.tangent_IJ, "#e76f51");
  canvas.add_line(cfg.tangent_LM, "#6a4c93");

  struct Labelled {
    const Point* p;
    const char* name;
  };
  const Point& G = cfg.circle_c.center;
  const Point& D = cfg.circle_c_prime.center;
  for (const Labelled& lab : std::vector<Labelled>{{&cfg.A, "A"},
                                                   {&cfg.C, "C"},
                                                   {&D, "D"},
                                                   {&cfg.E, "E"},
                                                   {&cfg.F, "F"},
                                                   {&G, "G"},
                                                   {&cfg.H, "H"},
                                                   {&cfg.I, "I"},
                                                   {&cfg.J, "J"},
                                                   {&cfg.K, "K"},
                                                   {&cfg.L, "L"},
                                                   {&cfg.M, "M"},
                                                   {&*x_apex, "X"}}) {
    canvas.add_marker(*lab.p);
    canvas.add_label(*lab.p, lab.name);
  }
  return canvas.finish();
}

/// Two circles with their four common tangents; when the tangency quadruples
/// are collinear the two carrying lines are drawn as well.
inline std::string render_pair(const hirotaka::CirclePair& pair, const RenderOptions& opt = {}) {
  Point mn = pair.circle1.center, mx = pair.circle1.center;
  detail::grow_circle(mn, mx, pair.circle1);
  detail::grow_circle(mn, mx, pair.circle2);

  detail::SvgCanvas canvas(mn, mx, opt);
  canvas.add_circle(pair.circle1, "#1f77b4");
  canvas.add_circle(pair.circle2, "#d62728");
  for (const auto& w : pair.tangents.external) canvas.add_line(w.line, "#e76f51");
  for (const auto& w : pair.tangents.internal) canvas.add_line(w.line, "#6a4c93");
  if (auto lines = hirotaka::collinear_quadruple_lines(pair)) {
    canvas.add_line(lines->first, "#2a9d8f");
    canvas.add_line(lines->second, "#2a9d8f");
  }

  const char* names[8] = {"P1", "P2", "Q1", "Q2", "R1", "R2", "S1", "S2"};
  int idx = 0;
  for (const auto& w : pair.tangents.external) {
    canvas.add_marker(w.on_first);
    canvas.add_label(w.on_first, names[idx++]);
    canvas.add_marker(w.on_second);
    canvas.add_label(w.on_second, names[idx++]);
  }
  for (const auto& w : pair.tangents.internal) {
    canvas.add_marker(w.on_first);
    canvas.add_label(w.on_first, names[idx++]);
    canvas.add_marker(w.on_second);
    canvas.add_label(w.on_second, names[idx++]);
  }
  return canvas.finish();
}

}  // namespace hi028::render
