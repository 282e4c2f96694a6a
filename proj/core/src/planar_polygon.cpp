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

#include "isocomb/planar_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "isocomb/error.hpp"

namespace isocomb {
namespace {

// Turning from direction `in` to direction `out`, in (-pi, pi].
double turn(const Vec2& in, const Vec2& out) { return std::atan2(cross(in, out), dot(in, out)); }

double shoelace(std::span<const Vec2> v) {
  // Relative to v[0] to keep the products small.
  double twice = 0.0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    twice += cross(v[i] - v[0], v[i + 1] - v[0]);
  }
  return 0.5 * twice;
}

double chain_length(std::span<const Vec2> v) {
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) total += norm(v[(i + 1) % v.size()] - v[i]);
  return total;
}

}  // namespace

double wrap_arc(double x, double period) {
  double r = std::fmod(x, period);
  if (r < 0.0) r += period;
  if (r >= period) r = 0.0;
  return r;
}

double PlanarPolygon::vertex_position(std::size_t i) const {
  return wrap_arc(cum_[i] - base_s_, perimeter_);
}

double PlanarPolygon::signed_area() const { return shoelace(vertices_); }

EdgeLocation PlanarPolygon::locate(double s) const {
  const std::size_t n = vertices_.size();
  const double u = wrap_arc(base_s_ + s, perimeter_);
  const auto it = std::upper_bound(cum_.begin(), cum_.begin() + static_cast<std::ptrdiff_t>(n), u);
  const std::size_t k = static_cast<std::size_t>(it - cum_.begin()) - 1;
  const double offset = u - cum_[k];
  const double snap = 0.25 * kLengthEpsRel * perimeter_;
  if (offset <= snap) return {k, 0.0, true};
  if (edge_length(k) - offset <= snap) return {(k + 1) % n, 0.0, true};
  return {k, offset, false};
}

PlanarPolygon PlanarPolygon::rebased(double new_base_s) const {
  PlanarPolygon copy = *this;
  copy.base_s_ = wrap_arc(new_base_s, perimeter_);
  return copy;
}

PlanarPolygon PlanarPolygon::transformed(const RigidMotion2& m) const {
  std::vector<Vec2> moved;
  moved.reserve(vertices_.size());
  for (const Vec2& v : vertices_) moved.push_back(m(v));
  return build_polygon(std::move(moved), base_s_);
}

PlanarPolygon build_polygon(std::vector<Vec2> vertices, double base_s) {
  if (vertices.size() < 3) {
    throw GeometryError(ErrorCode::kInvalidArgument, "polygon needs at least 3 vertices");
  }
  if (!std::isfinite(base_s)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "base_s is not finite");
  }
  for (const Vec2& v : vertices) {
    if (!is_finite(v)) throw GeometryError(ErrorCode::kInvalidArgument, "non-finite vertex");
  }

  const double original_perimeter = chain_length(vertices);
  if (!(original_perimeter > 0.0)) {
    throw GeometryError(ErrorCode::kDegenerateEdge, "zero perimeter");
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const double len = norm(vertices[(i + 1) % vertices.size()] - vertices[i]);
    if (len < kLengthEpsRel * original_perimeter) {
      throw GeometryError(ErrorCode::kDegenerateEdge, "edge " + std::to_string(i) + " is degenerate");
    }
  }
  if (!(shoelace(vertices) > 0.0)) {
    throw GeometryError(ErrorCode::kWrongOrientation, "vertices are not counterclockwise");
  }

  // Arc position of every input vertex, carried through the collinear merge
  // so the base point keeps its location on the boundary.
  std::vector<double> arc(vertices.size(), 0.0);
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    arc[i] = arc[i - 1] + norm(vertices[i] - vertices[i - 1]);
  }

  for (;;) {
    const std::size_t n = vertices.size();
    std::vector<bool> drop(n, false);
    std::size_t dropped = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 in = vertices[i] - vertices[(i + n - 1) % n];
      const Vec2 out = vertices[(i + 1) % n] - vertices[i];
      if (std::abs(turn(in, out)) < kCollinearAngle) {
        drop[i] = true;
        ++dropped;
      }
    }
    if (dropped == 0) break;
    if (n - dropped < 3) {
      throw GeometryError(ErrorCode::kDegenerateResult, "fewer than 3 non-collinear vertices");
    }
    std::vector<Vec2> kept;
    std::vector<double> kept_arc;
    for (std::size_t i = 0; i < n; ++i) {
      if (!drop[i]) {
        kept.push_back(vertices[i]);
        kept_arc.push_back(arc[i]);
      }
    }
    vertices = std::move(kept);
    arc = std::move(kept_arc);
  }

  PlanarPolygon poly;
  const std::size_t n = vertices.size();
  poly.cum_.assign(n + 1, 0.0);
  poly.directions_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e = vertices[(i + 1) % n] - vertices[i];
    const double len = norm(e);
    poly.cum_[i + 1] = poly.cum_[i] + len;
    poly.directions_[i] = e / len;
  }
  poly.perimeter_ = poly.cum_[n];
  poly.exterior_.resize(n);
  double total_turn = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double ext = turn(poly.directions_[(i + n - 1) % n], poly.directions_[i]);
    if (ext < 0.0) {
      throw GeometryError(ErrorCode::kNotConvex, "reflex vertex " + std::to_string(i));
    }
    if (ext >= kPi - kCollinearAngle) {
      throw GeometryError(ErrorCode::kNotSimple, "edge reversal at vertex " + std::to_string(i));
    }
    poly.exterior_[i] = ext;
    total_turn += ext;
  }
  if (std::abs(total_turn - kTwoPi) > 1e-9) {
    throw GeometryError(ErrorCode::kNotSimple, "total turning is not 2 pi");
  }
  poly.base_s_ = wrap_arc(base_s - arc[0], poly.perimeter_);
  poly.vertices_ = std::move(vertices);
  return poly;
}

Vec2 point_at(const PlanarPolygon& f, double s) {
  const EdgeLocation loc = f.locate(s);
  const Vec2& a = f.vertex(loc.edge);
  if (loc.at_vertex) return a;
  const Vec2& b = f.vertex((loc.edge + 1) % f.size());
  return a + (b - a) * (loc.offset / f.edge_length(loc.edge));
}

Angle right_semitangent(const PlanarPolygon& f, double s) {
  return Angle(direction(f.edge_direction(f.locate(s).edge)));
}

Angle left_semitangent(const PlanarPolygon& f, double s) {
  const EdgeLocation loc = f.locate(s);
  const std::size_t edge = loc.at_vertex ? (loc.edge + f.size() - 1) % f.size() : loc.edge;
  return Angle(direction(f.edge_direction(edge)));
}

double TurningFunction::operator()(double s) const {
  if (perimeter <= 0.0) return 0.0;
  const double periods = std::floor(s / perimeter);
  double local = s - periods * perimeter;
  if (local >= perimeter) local = 0.0;
  const auto it = std::upper_bound(breakpoints.begin(), breakpoints.end(), local);
  const double base_value = it == breakpoints.begin() ? 0.0 : values[static_cast<std::size_t>(it - breakpoints.begin()) - 1];
  return base_value + kTwoPi * periods;
}

TurningFunction turning_function(const PlanarPolygon& f) {
  struct Jump {
    double s;
    double angle;
  };
  std::vector<Jump> jumps;
  jumps.reserve(f.size());
  const double snap = 0.25 * kLengthEpsRel * f.perimeter();
  for (std::size_t i = 0; i < f.size(); ++i) {
    double pos = f.vertex_position(i);
    if (pos <= snap || f.perimeter() - pos <= snap) pos = f.perimeter();
    jumps.push_back({pos, f.exterior_angle(i)});
  }
  std::sort(jumps.begin(), jumps.end(), [](const Jump& a, const Jump& b) { return a.s < b.s; });

  TurningFunction tf;
  tf.perimeter = f.perimeter();
  double acc = 0.0;
  for (const Jump& j : jumps) {
    acc += j.angle;
    tf.breakpoints.push_back(j.s);
    tf.values.push_back(acc);
  }
  return tf;
}

ConvexityCertificate certify_curve(std::span<const Vec2> vertices, double tolerance,
                                   double min_edge) {
  ConvexityCertificate cert;
  cert.tolerance = tolerance;
  const std::size_t n = vertices.size();
  const double perimeter = n >= 3 ? chain_length(vertices) : 0.0;
  std::vector<Vec2> dirs(n);
  const double floor = std::max(kLengthEpsRel * perimeter, min_edge);
  bool degenerate = n < 3 || !(perimeter > 0.0);
  for (std::size_t i = 0; i < n && !degenerate; ++i) {
    const Vec2 e = vertices[(i + 1) % n] - vertices[i];
    const double len = norm(e);
    if (len < floor) {
      degenerate = true;
      break;
    }
    dirs[i] = e / len;
  }
  if (degenerate) {
    cert.degenerate = true;
    return cert;
  }

  cert.interior_angles.resize(n);
  cert.min_exterior = kPi;
  bool no_reversal = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double ext = turn(dirs[(i + n - 1) % n], dirs[i]);
    cert.interior_angles[i] = kPi - ext;
    cert.exterior_sum += ext;
    cert.min_exterior = std::min(cert.min_exterior, ext);
    if (std::abs(ext) >= kPi - tolerance) no_reversal = false;
  }
  cert.is_simple = shoelace(vertices) > 0.0 && no_reversal &&
                   std::abs(cert.exterior_sum - kTwoPi) <= tolerance;
  cert.is_convex = cert.is_simple && cert.min_exterior >= -tolerance;
  return cert;
}

ConvexityCertificate convexity_certificate(std::span<const Vec2> vertices, double tolerance) {
  if (vertices.size() < 3) {
    throw GeometryError(ErrorCode::kInvalidArgument, "certificate needs at least 3 vertices");
  }
  ConvexityCertificate cert = certify_curve(vertices, tolerance);
  if (cert.degenerate) throw GeometryError(ErrorCode::kDegenerateEdge, "zero-length edge in chain");
  return cert;
}

PlanarPolygon inscribe(const PlanarPolygon& f, std::size_t n) {
  if (n < 3) throw GeometryError(ErrorCode::kInvalidArgument, "inscribe needs n >= 3");
  const double p = f.perimeter();
  std::vector<Vec2> pts;
  pts.reserve(n);
  const double min_gap = kLengthEpsRel * p;
  for (std::size_t k = 0; k < n; ++k) {
    const Vec2 q = point_at(f, p * static_cast<double>(k) / static_cast<double>(n));
    if (!pts.empty() && norm(q - pts.back()) < min_gap) continue;
    pts.push_back(q);
  }
  while (pts.size() > 1 && norm(pts.front() - pts.back()) < min_gap) pts.pop_back();
  if (pts.size() < 3) {
    throw GeometryError(ErrorCode::kDegenerateResult, "fewer than 3 distinct samples");
  }
  try {
    return build_polygon(std::move(pts), 0.0);
  } catch (const GeometryError& e) {
    if (e.code() == ErrorCode::kDegenerateEdge || e.code() == ErrorCode::kDegenerateResult) {
      throw GeometryError(ErrorCode::kDegenerateResult, e.what());
    }
    throw;
  }
}

PlanarPolygon dilate_to_perimeter(const PlanarPolygon& f, double target, const Vec2& center) {
  if (!(target > 0.0) || !std::isfinite(target)) {
    throw GeometryError(ErrorCode::kInvalidArgument, "target perimeter must be positive");
  }
  const double ratio = target / f.perimeter();
  std::vector<Vec2> scaled;
  scaled.reserve(f.size());
  for (const Vec2& v : f.vertices()) scaled.push_back(center + (v - center) * ratio);
  return build_polygon(std::move(scaled), f.base_s() * ratio);
}

}  // namespace isocomb
