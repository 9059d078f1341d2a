#pragma once

#include <json.hpp>

#include "hi028/generators.hpp"
#include "hi028/version.hpp"

namespace hi028::report {

using json = nlohmann::ordered_json;
using exactnum::AlgNum;
using geom::Circle;
using geom::Line;
using geom::Point;

inline json value_json(const AlgNum& v, int digits) {
  return json{{"exact", exactnum::to_string(v)}, {"decimal", exactnum::to_decimal(v, digits)}};
}

inline json point_json(const Point& p, int digits) {
  return json{{"x", value_json(p.x, digits)}, {"y", value_json(p.y, digits)}};
}

inline json line_json(const Line& l, int digits) {
  return json{{"a", value_json(l.a(), digits)},
              {"b", value_json(l.b(), digits)},
              {"c", value_json(l.c(), digits)}};
}

inline json circle_json(const Circle& c, int digits) {
  return json{{"center", point_json(c.center, digits)}, {"radius", value_json(c.radius, digits)}};
}

inline json witness_json(const geom::TangencyWitness& w, int digits) {
  return json{{"line", line_json(w.line, digits)},
              {"on_first", point_json(w.on_first, digits)},
              {"on_second", point_json(w.on_second, digits)}};
}

inline json skeleton(const char* command) {
  return json{{"command", command},
              {"inputs", json::object()},
              {"flags", json::object()},
              {"witnesses", json::object()},
              {"failures", json::array()},
              {"version", kVersion}};
}

inline json forward_witnesses(const hirotaka::ForwardConfig& cfg, int digits) {
  json points = json::object();
  points["A"] = point_json(cfg.A, digits);
  points["C"] = point_json(cfg.C, digits);
  points["D"] = point_json(cfg.circle_c_prime.center, digits);
  points["E"] = point_json(cfg.E, digits);
  points["F"] = point_json(cfg.F, digits);
  points["G"] = point_json(cfg.circle_c.center, digits);
  points["H"] = point_json(cfg.H, digits);
  points["I"] = point_json(cfg.I, digits);
  points["J"] = point_json(cfg.J, digits);
  points["K"] = point_json(cfg.K, digits);
  points["L"] = point_json(cfg.L, digits);
  points["M"] = point_json(cfg.M, digits);
  json lines = json::object();
  lines["axis_x"] = line_json(cfg.axis_x, digits);
  lines["axis_y"] = line_json(cfg.axis_y, digits);
  lines["EF"] = line_json(cfg.line_EF, digits);
  lines["HC"] = line_json(cfg.line_HC, digits);
  lines["IJ"] = line_json(cfg.tangent_IJ, digits);
  lines["LM"] = line_json(cfg.tangent_LM, digits);
  return json{{"circles",
               {{"c", circle_json(cfg.circle_c, digits)},
                {"c_prime", circle_json(cfg.circle_c_prime, digits)}}},
              {"points", points},
              {"lines", lines}};
}

inline json construct_report(const hirotaka::ForwardConfig& cfg, int digits) {
  json rep = skeleton("construct");
  rep["inputs"] = {{"r", exactnum::to_string(cfg.r)}, {"r_prime", exactnum::to_string(cfg.r_prime)}};
  rep["witnesses"] = forward_witnesses(cfg, digits);
  return rep;
}

inline json verify_report(const hirotaka::ForwardConfig& cfg, const hirotaka::ClaimReport& claims,
                          int digits) {
  json rep = skeleton("verify");
  rep["inputs"] = {{"r", exactnum::to_string(cfg.r)}, {"r_prime", exactnum::to_string(cfg.r_prime)}};
  rep["flags"] = {{"parallel_IF_JC", claims.parallel_IF_JC},
                  {"perpendicular_IC_FJ", claims.perpendicular_IC_FJ},
                  {"angle_at_K_right", claims.angle_at_K_right},
                  {"inscribed_angles_45", claims.inscribed_angles_45},
                  {"ij_is_external_tangent", claims.ij_is_external_tangent},
                  {"lm_is_internal_tangent", claims.lm_is_internal_tangent},
                  {"lm_perpendicular_ij", claims.lm_perpendicular_ij},
                  {"quadruple_HCIM_collinear", claims.quadruple_HCIM_collinear},
                  {"quadruple_EFJL_collinear", claims.quadruple_EFJL_collinear},
                  {"quadruple_lines_perpendicular", claims.quadruple_lines_perpendicular}};
  rep["witnesses"] = forward_witnesses(cfg, digits);
  for (const std::string& name : claims.failed()) rep["failures"].push_back(name);
  return rep;
}

inline json reverse_report(const hirotaka::CirclePair& pair, const hirotaka::EquivalenceReport& eq,
                           int digits) {
  json rep = skeleton("reverse");
  rep["inputs"] = {{"r1", exactnum::to_string(pair.r1)},
                   {"r2", exactnum::to_string(pair.r2)},
                   {"d_squared", exactnum::to_string(pair.d_squared)},
                   {"scaled_frame", pair.scaled_frame}};
  rep["flags"] = {{"collinear_quadruples", eq.collinear_quadruples},
                  {"tangent_pairs_perpendicular", eq.tangent_pairs_perpendicular},
                  {"criterion_d2_eq_2r2", eq.criterion_d2_eq_2r2},
                  {"lines_perpendicular_when_collinear",
                   eq.lines_perpendicular_when_collinear
                       ? json(*eq.lines_perpendicular_when_collinear)
                       : json(nullptr)},
                  {"consistent", eq.consistent}};
  json ext = json::array();
  for (const auto& w : pair.tangents.external) ext.push_back(witness_json(w, digits));
  json intr = json::array();
  for (const auto& w : pair.tangents.internal) intr.push_back(witness_json(w, digits));
  rep["witnesses"] = {{"circles",
                       {{"first", circle_json(pair.circle1, digits)},
                        {"second", circle_json(pair.circle2, digits)}}},
                      {"external_tangents", ext},
                      {"internal_tangents", intr}};
  if (auto lines = hirotaka::collinear_quadruple_lines(pair)) {
    rep["witnesses"]["quadruple_lines"] =
        json::array({line_json(lines->first, digits), line_json(lines->second, digits)});
  } else {
    rep["witnesses"]["quadruple_lines"] = nullptr;
  }
  if (!eq.consistent) rep["failures"].push_back("equivalence_inconsistent");
  return rep;
}

inline json sweep_report(const hirotaka::SweepSummary& summary) {
  json rep = skeleton("sweep");
  rep["inputs"] = {{"mode", summary.mode == hirotaka::SweepMode::forward ? "forward" : "reverse"},
                   {"seed", summary.seed},
                   {"count", summary.count}};
  rep["flags"] = {{"all_passed", summary.failures == 0}};
  rep["witnesses"] = {{"passes", summary.count - summary.failures},
                      {"failures", summary.failures},
                      {"first_counterexample", summary.first_counterexample
                                                   ? json(*summary.first_counterexample)
                                                   : json(nullptr)}};
  if (summary.first_counterexample) rep["failures"].push_back(*summary.first_counterexample);
  return rep;
}

}  // namespace hi028::report
