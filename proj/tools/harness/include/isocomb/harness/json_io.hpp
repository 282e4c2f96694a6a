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


#pragma once

/// @file json_io.hpp
/// @brief JSON encodings of the geometric types and result records.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "isocomb/combination.hpp"
#include "isocomb/cones.hpp"
#include "isocomb/digon.hpp"
#include "isocomb/planar_polygon.hpp"
#include "isocomb/spherical_polygon.hpp"

namespace isocomb::harness {

using Json = nlohmann::ordered_json;

/// Unreadable or unwritable files and malformed JSON text.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_json_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Throws GeometryError(kInvalidArgument) on a schema mismatch and the
/// validation errors of the corresponding builders.
PlanarPolygon planar_polygon_from_json(const Json& j);
SphericalPolygon spherical_polygon_from_json(const Json& j, const Tolerances& tol = {});
Digon digon_from_json(const Json& j);

Json to_json(const PlanarPolygon& f);
Json to_json(const SphericalPolygon& m);
Json to_json(const ConvexityCertificate& c);
Json to_json(const SphericalCertificate& c);
Json to_json(const RigidMotion2& m);
Json to_json(const AlignmentResult& a);
Json to_json(const CombinedCurve& c);
Json to_json(const PogorelovImage& image);
Json to_json(const ConePositioning& p);
Json to_json(const DihedralReport& r);

/// {"alignment": ..., "combined": ..., "bending_residual": ...}; the
/// alignment entry is omitted when `alignment` is null.
Json combination_result(const AlignmentResult* alignment, const CombinedCurve& combined);

}  // namespace isocomb::harness
