// Copyright 2026 The isocomb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isocomb/combination.hpp"
#include "isocomb/cones.hpp"
#include "isocomb/digon.hpp"
#include "isocomb/error.hpp"
#include "isocomb/harness/json_io.hpp"
#include "isocomb/harness/suite.hpp"
#include "isocomb/harness/svg.hpp"

namespace {

using namespace isocomb;
using namespace isocomb::harness;

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitAlgorithm = 2;
constexpr int kExitIo = 3;

void emit(const Json& j, const std::string& out) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    write_text_file(out, text);
  }
}

std::vector<double> parse_csv(const std::string& csv) {
  std::vector<double> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) {
      throw GeometryError(ErrorCode::kInvalidArgument, "bad ladder entry '" + item + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw GeometryError(ErrorCode::kInvalidArgument, "empty ladder");
  return values;
}

int cmd_validate(const std::string& file, const Tolerances& tol) {
  const Json j = read_json_file(file);
  const std::string type = j.is_object() && j.contains("type") && j["type"].is_string()
                               ? j["type"].get<std::string>()
                               : "";
  Json out;
  if (type == "planar_polygon") {
    const PlanarPolygon f = planar_polygon_from_json(j);
    out = {{"valid", true},
           {"type", type},
           {"perimeter", f.perimeter()},
           {"vertices", f.size()},
           {"certificate", to_json(convexity_certificate(f.vertices(), tol.certificate))}};
  } else if (type == "spherical_polygon") {
    const SphericalPolygon m = spherical_polygon_from_json(j, tol);
    out = {{"valid", true},
           {"type", type},
           {"perimeter", m.perimeter()},
           {"vertices", m.size()},
           {"certificate", to_json(m.certificate())}};
  } else if (type == "digon") {
    const Digon d = digon_from_json(j);
    out = {{"valid", true}, {"type", type}, {"angle", d.angle.radians}, {"perimeter", d.perimeter()}};
  } else {
    throw GeometryError(ErrorCode::kInvalidArgument, "unknown type '" + type + "'");
  }
  emit(out, "");
  return kExitOk;
}

int cmd_planar(const std::string& a, const std::string& b, const std::string& out,
               const std::string& svg, bool do_align, const Tolerances& tol) {
  MarkedPair pair = make_pair(planar_polygon_from_json(read_json_file(a)),
                              planar_polygon_from_json(read_json_file(b)), tol);
  Json result;
  CombinedCurve combined;
  MarkedPair shown = pair;
  if (do_align) {
    auto [alignment, c] = combine_aligned(pair, tol);
    result = combination_result(&alignment, c);
    shown = alignment.aligned;
    combined = std::move(c);
  } else {
    combined = combine(pair, tol);
    result = combination_result(nullptr, combined);
  }
  emit(result, out);
  if (!svg.empty()) {
    std::vector<Vec2> moved;
    for (const Vec2& v : shown.F2.vertices()) moved.push_back(shown.motion(v));
    const std::vector<SvgCurve> curves{svg_curve("F1", shown.F1), svg_curve("F2", moved),
                                       svg_curve("combined", combined.curve)};
    write_text_file(svg, render_svg(curves));
  }
  return kExitOk;
}

int cmd_pogorelov(const std::string& a, const std::string& b, const std::string& out,
                  std::size_t subdivisions, const Tolerances& tol) {
  TransformOptions opt;
  opt.subdivisions = subdivisions;
  const PogorelovImage image = transform_link_pair(spherical_polygon_from_json(read_json_file(a), tol),
                                                   spherical_polygon_from_json(read_json_file(b), tol), tol, opt);
  emit(to_json(image), out);
  return kExitOk;
}

int cmd_cone_combine(const std::string& a, const std::string& b, const std::string& out,
                     const std::string& svg, bool position, const Tolerances& tol) {
  const ConvexCone3 k1 = cone_from_link(spherical_polygon_from_json(read_json_file(a), tol));
  const ConvexCone3 k2 = cone_from_link(spherical_polygon_from_json(read_json_file(b), tol));
  Json result;
  std::vector<SvgCurve> curves;
  if (position) {
    const ConePositioning p = position_cones(k1, k2, tol);
    result = to_json(p);
    curves = {svg_curve("K1", p.positioned1.link), svg_curve("K2", p.positioned2.link),
              svg_curve("combined", p.combined.link)};
  } else {
    const ConvexCone3 c = combine_cones(k1, k2, tol);
    result = {{"combined", to_json(c.link)}, {"certificate", to_json(c.link.certificate())}};
    curves = {svg_curve("K1", k1.link), svg_curve("K2", k2.link), svg_curve("combined", c.link)};
  }
  emit(result, out);
  if (!svg.empty()) write_text_file(svg, render_svg(curves));
  return kExitOk;
}

int cmd_digon(double angle1, double angle2, const std::string& ladder, double offset,
              const std::string& out, const Tolerances& tol) {
  const std::vector<double> eps = parse_csv(ladder);
  const DihedralReport report =
      combine_dihedral(make_digon(Angle(angle1)), make_digon(Angle(angle2)), eps, offset, tol);
  emit(to_json(report), out);
  return report.all_convex ? kExitOk : kExitAlgorithm;
}

int cmd_suite(SuiteConfig config, const std::string& report_path) {
  const SuiteReport report = run_suite(config);
  const std::string text = format_report(report);
  if (report_path.empty()) {
    std::cout << text;
  } else {
    write_text_file(report_path, text);
  }
  std::fprintf(stderr, "%zu/%zu trials passed\n", report.passed, report.trials.size());
  return report.passed == report.trials.size() ? kExitOk : kExitAlgorithm;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Isometric combination of convex curves and cones"};
  app.require_subcommand(1);

  std::string file_a, file_b, out, svg, ladder, report, kind;
  bool position = false, identical = false;
  double angle1 = 0.0, angle2 = 0.0, offset = 0.0;
  std::size_t subdivisions = 256;
  SuiteConfig config;
  std::size_t replay = 0;

  auto* validate = app.add_subcommand("validate", "Validate a polygon or digon JSON file");
  validate->add_option("file", file_a, "Input JSON")->required();

  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("--a", file_a, "First polygon JSON")->required();
    sub->add_option("--b", file_b, "Second polygon JSON")->required();
    sub->add_option("--out", out, "Result JSON (default: stdout)");
  };
  auto* align_cmd = app.add_subcommand("align", "Align and combine two planar polygons");
  add_pair(align_cmd);
  align_cmd->add_option("--svg", svg, "SVG plot of the aligned pair and combination");
  auto* combine_cmd = app.add_subcommand("combine", "Combine two planar polygons as given");
  add_pair(combine_cmd);
  combine_cmd->add_option("--svg", svg, "SVG plot");
  auto* pog = app.add_subcommand("pogorelov", "Pairwise transform of two spherical links");
  add_pair(pog);
  pog->add_option("--subdivisions", subdivisions, "Samples per link length")->check(CLI::PositiveNumber);
  auto* cone = app.add_subcommand("cone-combine", "Combine two cones given by their links");
  add_pair(cone);
  cone->add_option("--svg", svg, "SVG plot (orthographic onto the x1,x2-plane)");
  cone->add_flag("--position", position, "Position the cones before combining");
  auto* digon = app.add_subcommand("digon", "Combine two dihedral angles through truncations");
  digon->add_option("--angle1", angle1, "First dihedral angle, radians")->required();
  digon->add_option("--angle2", angle2, "Second dihedral angle, radians")->required();
  digon->add_option("--ladder", ladder, "Comma-separated decreasing truncation depths")->required();
  digon->add_option("--base-offset", offset, "Base shift of the second quadrilateral");
  digon->add_option("--out", out, "Result JSON (default: stdout)");
  auto* suite = app.add_subcommand("suite", "Run a randomized suite");
  suite->add_option("kind", kind, "planar or cone")->required()->check(CLI::IsMember({"planar", "cone"}));
  suite->add_option("--trials", config.trials, "Number of trials");
  suite->add_option("--seed", config.seed, "Master seed");
  suite->add_option("--report", report, "Report file (default: stdout)");
  suite->add_option("--min-vertices", config.min_vertices, "Smallest vertex count");
  suite->add_option("--max-vertices", config.max_vertices, "Largest vertex count");
  suite->add_option("--min-length", config.min_link_length, "Smallest link length (cone suite)");
  suite->add_option("--max-length", config.max_link_length, "Largest link length (cone suite)");
  suite->add_option("--threads", config.threads, "Worker threads (0: all cores)");
  auto* replay_opt = suite->add_option("--replay", replay, "Run only this trial id");
  suite->add_flag("--identical", identical, "Use one fixed shape for both members of every pair");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitValidation;
  }

  try {
    const Tolerances tol = tolerances_from_env();
    if (*validate) return cmd_validate(file_a, tol);
    if (*align_cmd) return cmd_planar(file_a, file_b, out, svg, true, tol);
    if (*combine_cmd) return cmd_planar(file_a, file_b, out, svg, false, tol);
    if (*pog) return cmd_pogorelov(file_a, file_b, out, subdivisions, tol);
    if (*cone) return cmd_cone_combine(file_a, file_b, out, svg, position, tol);
    if (*digon) return cmd_digon(angle1, angle2, ladder, offset, out, tol);
    config.kind = kind == "planar" ? SuiteKind::kPlanar : SuiteKind::kCone;
    config.identical_pair = identical;
    config.tolerances = tol;
    if (*replay_opt) config.replay = replay;
    return cmd_suite(config, report);
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const GeometryError& e) {
    std::cerr << e.what() << "\n";
    return is_algorithmic_failure(e.code()) ? kExitAlgorithm : kExitValidation;
  }
}
