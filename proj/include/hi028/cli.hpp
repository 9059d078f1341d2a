#pragma once

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "hi028/json_report.hpp"
#include "hi028/render.hpp"

namespace hi028::cli {

using exactnum::Rational;

namespace detail {

inline render::RenderOptions make_render_options(int canvas, const std::string& margin_text,
                                                 int digits, bool no_labels, double stroke) {
  render::RenderOptions opt;
  opt.canvas_size = canvas;
  opt.margin = exactnum::parse_rational(margin_text);
  opt.decimal_digits = digits;
  opt.show_labels = !no_labels;
  opt.stroke_width = stroke;
  return opt;
}

}  // namespace detail

/// Full command dispatch; argv[0] is the program name.  Returns the process
/// exit code: 0 on success (all claims hold / reports consistent), 1 when a
/// verified property fails, 2 on invalid input, with the error name on stderr.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact constructions and checks for the HI-028 two-circle figure"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  std::string r_text, rp_text, out_path;
  int digits = 12;

  CLI::App* construct = app.add_subcommand("construct", "build the figure, print exact data");
  construct->add_option("r,--r", r_text, "radius of circle c")->required();
  construct->add_option("r_prime,--r-prime", rp_text, "radius of circle c'")->required();
  construct->add_option("--digits", digits, "decimal digits in the report");
  construct->add_option("--out", out_path, "write the report here instead of stdout");

  CLI::App* verify = app.add_subcommand("verify", "build the figure, check every claim");
  verify->add_option("r,--r", r_text, "radius of circle c")->required();
  verify->add_option("r_prime,--r-prime", rp_text, "radius of circle c'")->required();
  verify->add_option("--digits", digits, "decimal digits in the report");

  std::string r1_text, r2_text, d_text, dsq_text;
  CLI::App* reverse = app.add_subcommand(
      "reverse", "check the collinearity/perpendicularity/criterion equivalence on a circle pair");
  reverse->add_option("r1,--r1", r1_text, "first radius")->required();
  reverse->add_option("r2,--r2", r2_text, "second radius")->required();
  reverse->add_option("d,--d", d_text, "center distance");
  reverse->add_option("--d-squared", dsq_text, "squared center distance (allows irrational d)");
  reverse->add_option("--digits", digits, "decimal digits in the report");

  std::string mode_text = "forward";
  std::uint64_t seed = 1;
  int count = 0;
  CLI::App* sweep = app.add_subcommand("sweep", "randomised bulk checking");
  sweep->add_option("--mode", mode_text, "forward or reverse")->required();
  sweep->add_option("--count", count, "number of samples")->required();
  sweep->add_option("--seed", seed, "generator seed");

  std::vector<std::string> render_values;
  std::string margin_text = "1/10";
  int canvas = 800;
  int svg_digits = 8;
  bool no_labels = false;
  double stroke = 1.5;
  CLI::App* render_cmd = app.add_subcommand("render", "draw a figure as SVG");
  render_cmd->add_option("values", render_values,
                         "r r_prime for the figure, or r1 r2 d for a plain pair")
      ->expected(2, 3);
  render_cmd->add_option("--r", r_text, "radius of circle c (figure form)");
  render_cmd->add_option("--r-prime", rp_text, "radius of circle c' (figure form)");
  render_cmd->add_option("--r1", r1_text, "first radius (pair form)");
  render_cmd->add_option("--r2", r2_text, "second radius (pair form)");
  render_cmd->add_option("--d", d_text, "center distance (pair form)");
  render_cmd->add_option("--d-squared", dsq_text, "squared center distance for a pair");
  render_cmd->add_option("--out", out_path, "output file (omit to print the SVG)");
  render_cmd->add_option("--canvas", canvas, "canvas size in pixels");
  render_cmd->add_option("--margin", margin_text, "blank margin fraction, a rational");
  render_cmd->add_option("--digits", svg_digits, "decimal digits for SVG coordinates");
  render_cmd->add_flag("--no-labels", no_labels, "suppress point labels");
  render_cmd->add_option("--stroke-width", stroke, "stroke width in pixels");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& arg : args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "INVALID_ARGUMENT: " << e.what() << "\n";
    return 2;
  }

  try {
    if (construct->parsed() || verify->parsed()) {
      Rational r = exactnum::parse_rational(r_text);
      Rational rp = exactnum::parse_rational(rp_text);
      hirotaka::ForwardConfig cfg = hirotaka::construct_forward(r, rp);
      if (construct->parsed()) {
        std::string text = report::construct_report(cfg, digits).dump(2) + "\n";
        if (out_path.empty()) {
          out << text;
          return 0;
        }
        std::ofstream file(out_path, std::ios::binary);
        file << text;
        if (!file.good())
          throw Error(ErrorCode::invalid_argument, "cannot write '" + out_path + "'");
        return 0;
      }
      hirotaka::ClaimReport claims = hirotaka::verify_forward(cfg);
      out << report::verify_report(cfg, claims, digits).dump(2) << "\n";
      return claims.all() ? 0 : 1;
    }

    if (reverse->parsed()) {
      Rational r1 = exactnum::parse_rational(r1_text);
      Rational r2 = exactnum::parse_rational(r2_text);
      bool has_d = !d_text.empty();
      bool has_dsq = !dsq_text.empty();
      if (has_d == has_dsq)
        throw Error(ErrorCode::invalid_argument, "provide either d or --d-squared");
      hirotaka::CirclePair pair =
          has_d ? hirotaka::make_pair(r1, r2, exactnum::parse_rational(d_text))
                : hirotaka::make_pair_d_squared(r1, r2, exactnum::parse_rational(dsq_text));
      hirotaka::EquivalenceReport eq = hirotaka::equivalence_check(pair);
      out << report::reverse_report(pair, eq, digits).dump(2) << "\n";
      return eq.consistent ? 0 : 1;
    }

    if (sweep->parsed()) {
      hirotaka::SweepMode mode;
      if (mode_text == "forward")
        mode = hirotaka::SweepMode::forward;
      else if (mode_text == "reverse")
        mode = hirotaka::SweepMode::reverse;
      else
        throw Error(ErrorCode::invalid_argument, "mode must be forward or reverse");
      if (count < 0) throw Error(ErrorCode::invalid_argument, "count must be nonnegative");
      hirotaka::SweepSummary summary = hirotaka::sweep(mode, seed, count);
      out << report::sweep_report(summary).dump(2) << "\n";
      return summary.failures == 0 ? 0 : 1;
    }

    if (render_cmd->parsed()) {
      render::RenderOptions opt =
          detail::make_render_options(canvas, margin_text, svg_digits, no_labels, stroke);
      bool named_figure = !r_text.empty() || !rp_text.empty();
      bool named_pair = !r1_text.empty() || !r2_text.empty() || !d_text.empty();
      if (!render_values.empty() && (named_figure || named_pair))
        throw Error(ErrorCode::invalid_argument, "mixing positional and named radii");
      if (named_figure && !named_pair && !r_text.empty() && !rp_text.empty()) {
        if (!dsq_text.empty())
          throw Error(ErrorCode::invalid_argument, "--d-squared needs the pair form");
        render_values = {r_text, rp_text};
      } else if (named_pair && !named_figure && !r1_text.empty() && !r2_text.empty()) {
        render_values = {r1_text, r2_text};
        if (!d_text.empty()) render_values.push_back(d_text);
      }
      std::string svg;
      report::json inputs;
      if (render_values.size() == 2 && dsq_text.empty()) {
        Rational r = exactnum::parse_rational(render_values[0]);
        Rational rp = exactnum::parse_rational(render_values[1]);
        svg = render::render_forward(hirotaka::construct_forward(r, rp), opt);
        inputs = {{"kind", "forward"},
                  {"r", exactnum::to_string(r)},
                  {"r_prime", exactnum::to_string(rp)}};
      } else if (render_values.size() == 3 && dsq_text.empty()) {
        Rational r1 = exactnum::parse_rational(render_values[0]);
        Rational r2 = exactnum::parse_rational(render_values[1]);
        Rational d = exactnum::parse_rational(render_values[2]);
        svg = render::render_pair(hirotaka::make_pair(r1, r2, d), opt);
        inputs = {{"kind", "pair"},
                  {"r1", exactnum::to_string(r1)},
                  {"r2", exactnum::to_string(r2)},
                  {"d", exactnum::to_string(d)}};
      } else if (render_values.size() == 2) {
        Rational r1 = exactnum::parse_rational(render_values[0]);
        Rational r2 = exactnum::parse_rational(render_values[1]);
        Rational dsq = exactnum::parse_rational(dsq_text);
        svg = render::render_pair(hirotaka::make_pair_d_squared(r1, r2, dsq), opt);
        inputs = {{"kind", "pair"},
                  {"r1", exactnum::to_string(r1)},
                  {"r2", exactnum::to_string(r2)},
                  {"d_squared", exactnum::to_string(dsq)}};
      } else {
        throw Error(ErrorCode::invalid_argument,
                    "give r r_prime, r1 r2 d, or r1 r2 with --d-squared "
                    "(positional or via --r/--r-prime, --r1/--r2/--d)");
      }
      if (out_path.empty()) {
        out << svg;
        return 0;
      }
      std::ofstream file(out_path, std::ios::binary);
      file << svg;
      if (!file.good())
        throw Error(ErrorCode::invalid_argument, "cannot write '" + out_path + "'");
      file.close();
      report::json rep = report::skeleton("render");
      rep["inputs"] = inputs;
      rep["witnesses"] = {{"output", out_path}, {"bytes", svg.size()}};
      out << rep.dump(2) << "\n";
      return 0;
    }
  } catch (const Error& e) {
    err << e.what() << "\n";
    return 2;
  }
  err << "INVALID_ARGUMENT: no subcommand\n";
  return 2;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, out, err);
}

}  // namespace hi028::cli
