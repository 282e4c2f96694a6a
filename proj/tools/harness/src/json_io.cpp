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


#include "isocomb/harness/json_io.hpp"

#include <fstream>
#include <sstream>

#include "isocomb/error.hpp"

namespace isocomb::harness {
namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw GeometryError(ErrorCode::kInvalidArgument, "schema: " + what);
}

void expect_type(const Json& j, const char* type) {
  if (!j.is_object() || !j.contains("type") || j["type"] != type) {
    schema_error(std::string("expected an object with \"type\": \"") + type + "\"");
  }
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) schema_error(std::string(what) + " must be a number");
  return j.get<double>();
}

Json vec(const Vec2& v) { return Json::array({v.x, v.y}); }
Json vec(const Vec3& v) { return Json::array({v.x0, v.x1, v.x2}); }

}  // namespace

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return Json::parse(buffer.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

PlanarPolygon planar_polygon_from_json(const Json& j) {
  expect_type(j, "planar_polygon");
  if (!j.contains("vertices") || !j["vertices"].is_array()) schema_error("missing vertices");
  std::vector<Vec2> v;
  for (const Json& p : j["vertices"]) {
    if (!p.is_array() || p.size() != 2) schema_error("planar vertex must be [x, y]");
    v.push_back({number(p[0], "x"), number(p[1], "y")});
  }
  const double base = j.contains("base_s") ? number(j["base_s"], "base_s") : 0.0;
  return build_polygon(std::move(v), base);
}

SphericalPolygon spherical_polygon_from_json(const Json& j, const Tolerances& tol) {
  expect_type(j, "spherical_polygon");
  if (!j.contains("vertices") || !j["vertices"].is_array()) schema_error("missing vertices");
  std::vector<Vec3> v;
  for (const Json& p : j["vertices"]) {
    if (!p.is_array() || p.size() != 3) schema_error("spherical vertex must be [x0, x1, x2]");
    v.push_back({number(p[0], "x0"), number(p[1], "x1"), number(p[2], "x2")});
  }
  const double base = j.contains("base_s") ? number(j["base_s"], "base_s") : 0.0;
  return build_spherical_polygon(std::move(v), base, tol);
}

Digon digon_from_json(const Json& j) {
  expect_type(j, "digon");
  if (!j.contains("angle")) schema_error("missing angle");
  Rotation3 placement;
  if (j.contains("placement")) {
    const Json& p = j["placement"];
    if (!p.is_array() || p.size() != 4) schema_error("placement must be [ax0, ax1, ax2, radians]");
    const Vec3 axis{number(p[0], "axis"), number(p[1], "axis"), number(p[2], "axis")};
    if (norm(axis) == 0.0) schema_error("placement axis is zero");
    placement = Rotation3::about_axis(axis, number(p[3], "radians"));
  }
  return make_digon(Angle(number(j["angle"], "angle")), placement);
}

Json to_json(const PlanarPolygon& f) {
  Json v = Json::array();
  for (const Vec2& p : f.vertices()) v.push_back(vec(p));
  return {{"type", "planar_polygon"}, {"vertices", v}, {"base_s", f.base_s()}};
}

Json to_json(const SphericalPolygon& m) {
  Json v = Json::array();
  for (const Vec3& p : m.vertices()) v.push_back(vec(p));
  return {{"type", "spherical_polygon"}, {"vertices", v}, {"base_s", m.base_s()}};
}

Json to_json(const ConvexityCertificate& c) {
  return {{"is_convex", c.is_convex},           {"is_simple", c.is_simple},
          {"degenerate", c.degenerate},         {"min_exterior", c.min_exterior},
          {"exterior_sum", c.exterior_sum},     {"tolerance", c.tolerance},
          {"interior_angles", c.interior_angles}};
}

Json to_json(const SphericalCertificate& c) {
  return {{"is_convex", c.is_convex},
          {"degenerate", c.degenerate},
          {"min_turning", c.min_turning},
          {"max_turning", c.max_turning},
          {"turning_sum", c.turning_sum},
          {"area", c.area},
          {"gauss_bonnet_residual", c.gauss_bonnet_residual},
          {"perimeter", c.perimeter}};
}

Json to_json(const RigidMotion2& m) {
  return {{"rotation", m.rotation.radians}, {"translation", vec(m.translation)}};
}

Json to_json(const AlignmentResult& a) {
  return {{"sigma0", a.sigma0},
          {"rotation", a.motion.rotation.radians},
          {"translation", vec(a.motion.translation)},
          {"margin", a.margin.radians}};
}

Json to_json(const CombinedCurve& c) {
  Json v = Json::array();
  for (const Vec2& p : c.curve) v.push_back(vec(p));
  return {{"vertices", v}, {"certificate", to_json(c.certificate)}};
}

Json to_json(const PogorelovImage& image) {
  Json t1 = Json::array(), t2 = Json::array();
  for (const Vec2& p : image.tilde1) t1.push_back(vec(p));
  for (const Vec2& p : image.tilde2) t2.push_back(vec(p));
  return {{"s", image.s},
          {"x0_sums", image.x0_sums},
          {"tilde1", t1},
          {"tilde2", t2},
          {"segment_mismatch", segment_mismatch(image)}};
}

Json to_json(const ConePositioning& p) {
  return {{"psi", p.psi.radians},
          {"sigma0", p.sigma0},
          {"margin", p.margin},
          {"candidates_tried", p.candidates_tried},
          {"combined", to_json(p.combined.link)},
          {"certificate", to_json(p.combined.link.certificate())}};
}

Json to_json(const DihedralReport& r) {
  Json levels = Json::array();
  for (const DihedralLevel& l : r.levels) {
    levels.push_back({{"eps", l.eps},
                      {"depth2", l.depth2},
                      {"perimeter", l.perimeter},
                      {"hausdorff_to_previous", l.hausdorff_to_previous},
                      {"angle_estimate", l.angle_estimate},
                      {"positioning", to_json(l.positioning)}});
  }
  return {{"levels", levels},
          {"all_convex", r.all_convex},
          {"hausdorff_decreasing", r.hausdorff_decreasing}};
}

Json combination_result(const AlignmentResult* alignment, const CombinedCurve& combined) {
  Json out = Json::object();
  if (alignment != nullptr) out["alignment"] = to_json(*alignment);
  out["combined"] = to_json(combined);
  out["bending_residual"] = bending_check(combined);
  return out;
}

}  // namespace isocomb::harness
