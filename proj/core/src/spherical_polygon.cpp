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


#include "isocomb/spherical_polygon.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "isocomb/error.hpp"

namespace isocomb {
namespace {

Vec3 unit(const Vec3& v) { return v / norm(v); }

// Signed area of the geodesic triangle (c, a, b) for unit vectors.
double triangle_area(const Vec3& c, const Vec3& a, const Vec3& b) {
  const double num = dot(c, cross(a, b));
  const double den = 1.0 + dot(c, a) + dot(a, b) + dot(b, c);
  return 2.0 * std::atan2(num, den);
}

}  // namespace

Rotation3 Rotation3::about_axis(const Vec3& axis, double radians) {
  const Vec3 k = unit(axis);
  const double c = std::cos(radians);
  const double s = std::sin(radians);
  const double t = 1.0 - c;
  Rotation3 r;
  r.m = {{{t * k.x0 * k.x0 + c, t * k.x0 * k.x1 - s * k.x2, t * k.x0 * k.x2 + s * k.x1},
          {t * k.x0 * k.x1 + s * k.x2, t * k.x1 * k.x1 + c, t * k.x1 * k.x2 - s * k.x0},
          {t * k.x0 * k.x2 - s * k.x1, t * k.x1 * k.x2 + s * k.x0, t * k.x2 * k.x2 + c}}};
  return r;
}

Rotation3 Rotation3::about_x0(Angle psi) {
  const double c = std::cos(psi.radians);
  const double s = std::sin(psi.radians);
  Rotation3 r;
  r.m = {{{1, 0, 0}, {0, c, -s}, {0, s, c}}};
  return r;
}

Rotation3 Rotation3::from_to(const Vec3& a, const Vec3& b) {
  const Vec3 u = unit(a);
  const Vec3 w = unit(b);
  const Vec3 axis = cross(u, w);
  const double sin_t = norm(axis);
  const double cos_t = dot(u, w);
  if (sin_t < 1e-15) {
    if (cos_t > 0.0) return identity();
    // Half turn about any axis perpendicular to u.
    const Vec3 helper = std::abs(u.x0) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    return about_axis(cross(u, helper), kPi);
  }
  return about_axis(axis, std::atan2(sin_t, cos_t));
}

Vec3 Rotation3::operator()(const Vec3& v) const {
  return {m[0][0] * v.x0 + m[0][1] * v.x1 + m[0][2] * v.x2,
          m[1][0] * v.x0 + m[1][1] * v.x1 + m[1][2] * v.x2,
          m[2][0] * v.x0 + m[2][1] * v.x1 + m[2][2] * v.x2};
}

Rotation3 Rotation3::transpose() const {
  Rotation3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
  }
  return r;
}

Rotation3 operator*(const Rotation3& outer, const Rotation3& inner) {
  Rotation3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      r.m[i][j] = outer.m[i][0] * inner.m[0][j] + outer.m[i][1] * inner.m[1][j] +
                  outer.m[i][2] * inner.m[2][j];
    }
  }
  return r;
}

Vec3 unit_fixed_point(const Vec3& v) {
  // Repeated normalization ends in a fixed point or a short cycle; the
  // lexicographically smallest cycle member is returned.
  constexpr int kMaxSteps = 16;
  std::array<Vec3, kMaxSteps> orbit;
  orbit[0] = unit(v);
  for (int i = 1; i < kMaxSteps; ++i) {
    orbit[i] = unit(orbit[i - 1]);
    for (int j = i - 1; j >= 0; --j) {
      if (orbit[j] != orbit[i]) continue;
      auto less = [](const Vec3& a, const Vec3& b) {
        return std::tie(a.x0, a.x1, a.x2) < std::tie(b.x0, b.x1, b.x2);
      };
      return *std::min_element(orbit.begin() + j, orbit.begin() + i, less);
    }
  }
  return orbit[kMaxSteps - 1];
}

double arc_length(const Vec3& a, const Vec3& b) { return std::atan2(norm(cross(a, b)), dot(a, b)); }

double geodesic_turning(const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 n_in = cross(a, b);
  const Vec3 n_out = cross(b, c);
  return std::atan2(dot(b, cross(n_in, n_out)), dot(n_in, n_out));
}

SphericalCertificate certify_spherical(std::span<const Vec3> v, const Tolerances& tol) {
  SphericalCertificate cert;
  const std::size_t n = v.size();
  if (n < 3) {
    cert.degenerate = true;
    return cert;
  }
  Vec3 sum;
  for (std::size_t i = 0; i < n; ++i) {
    const double len = arc_length(v[i], v[(i + 1) % n]);
    if (len < 1e-14 || len > kPi - 1e-12) cert.degenerate = true;
    cert.perimeter += len;
    sum += v[i];
  }
  if (cert.degenerate || norm(sum) < 1e-12) {
    cert.degenerate = true;
    return cert;
  }
  const Vec3 c = unit(sum);
  cert.turning.resize(n);
  cert.min_turning = kPi;
  cert.max_turning = -kPi;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = geodesic_turning(v[(i + n - 1) % n], v[i], v[(i + 1) % n]);
    cert.turning[i] = t;
    cert.turning_sum += t;
    cert.min_turning = std::min(cert.min_turning, t);
    cert.max_turning = std::max(cert.max_turning, t);
    cert.area += triangle_area(c, v[i], v[(i + 1) % n]);
  }
  cert.gauss_bonnet_residual = std::abs(cert.turning_sum + cert.area - kTwoPi);
  cert.is_convex = cert.min_turning >= -tol.certificate &&
                   cert.max_turning < kPi - tol.certificate &&
                   cert.gauss_bonnet_residual <= tol.gauss_bonnet && cert.perimeter < kTwoPi;
  return cert;
}

double SphericalPolygon::vertex_position(std::size_t i) const {
  return wrap_arc(cum_[i] - base_s_, perimeter_);
}

EdgeLocation SphericalPolygon::locate(double s) const {
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

SphericalPolygon SphericalPolygon::rebased(double new_base_s) const {
  SphericalPolygon copy = *this;
  copy.base_s_ = wrap_arc(new_base_s, perimeter_);
  return copy;
}

SphericalPolygon SphericalPolygon::rotated(const Rotation3& r) const {
  std::vector<Vec3> moved;
  moved.reserve(vertices_.size());
  for (const Vec3& v : vertices_) moved.push_back(unit_fixed_point(r(v)));
  return make_spherical_polygon(std::move(moved), base_s_);
}

SphericalPolygon make_spherical_polygon(std::vector<Vec3> vertices, double base_s,
                                        const Tolerances& tol) {
  if (vertices.size() < 3) {
    throw GeometryError(ErrorCode::kInvalidArgument, "spherical polygon needs at least 3 vertices");
  }
  SphericalPolygon poly;
  const std::size_t n = vertices.size();
  poly.cum_.assign(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    poly.cum_[i + 1] = poly.cum_[i] + arc_length(vertices[i], vertices[(i + 1) % n]);
  }
  poly.perimeter_ = poly.cum_[n];
  if (!(poly.perimeter_ > 0.0)) {
    throw GeometryError(ErrorCode::kDegenerateEdge, "zero perimeter");
  }
  poly.cert_ = certify_spherical(vertices, tol);
  poly.base_s_ = wrap_arc(base_s, poly.perimeter_);
  poly.vertices_ = std::move(vertices);
  return poly;
}

SphericalPolygon build_spherical_polygon(std::vector<Vec3> vertices, double base_s,
                                         const Tolerances& tol) {
  if (vertices.size() < 3) {
    throw GeometryError(ErrorCode::kInvalidArgument, "spherical polygon needs at least 3 vertices");
  }
  if (!std::isfinite(base_s)) throw GeometryError(ErrorCode::kInvalidArgument, "base_s is not finite");
  for (Vec3& v : vertices) {
    if (!is_finite(v)) throw GeometryError(ErrorCode::kInvalidArgument, "non-finite vertex");
    if (std::abs(norm(v) - 1.0) > 1e-9) {
      throw GeometryError(ErrorCode::kNotOnSphere, "vertex norm " + std::to_string(norm(v)));
    }
    v = unit_fixed_point(v);
  }
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double len = arc_length(vertices[i], vertices[(i + 1) % n]);
    if (len > kPi - 1e-12) {
      throw GeometryError(ErrorCode::kAntipodalEdge, "edge " + std::to_string(i));
    }
    if (len < 1e-14) {
      throw GeometryError(ErrorCode::kDegenerateEdge, "edge " + std::to_string(i));
    }
  }
  SphericalPolygon poly = make_spherical_polygon(std::move(vertices), base_s, tol);
  const SphericalCertificate& c = poly.certificate();
  if (!c.is_convex) {
    throw GeometryError(ErrorCode::kNotConvexSpherical,
                        "min turning " + std::to_string(c.min_turning) + ", Gauss-Bonnet residual " +
                            std::to_string(c.gauss_bonnet_residual) + ", perimeter " +
                            std::to_string(c.perimeter));
  }
  return poly;
}

Vec3 sph_point_at(const SphericalPolygon& m, double s) {
  const EdgeLocation loc = m.locate(s);
  const Vec3& a = m.vertex(loc.edge);
  if (loc.at_vertex) return a;
  const Vec3& b = m.vertex((loc.edge + 1) % m.size());
  const Vec3 ortho = unit(b - a * dot(a, b));
  return a * std::cos(loc.offset) + ortho * std::sin(loc.offset);
}

Vec3 sph_centroid(const SphericalPolygon& m) {
  Vec3 moment;
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& a = m.vertex(i);
    const Vec3& b = m.vertex((i + 1) % n);
    moment += unit(cross(a, b)) * (0.5 * m.edge_length(i));
  }
  return unit(moment);
}

double point_arc_distance(const Vec3& p, const Vec3& a, const Vec3& b) {
  const Vec3 n = unit(cross(a, b));
  const double h = dot(p, n);
  const Vec3 in_plane = p - n * h;
  if (norm(in_plane) > 1e-15 && dot(cross(a, in_plane), n) >= 0.0 &&
      dot(cross(in_plane, b), n) >= 0.0) {
    return std::atan2(std::abs(h), norm(in_plane));
  }
  return std::min(arc_length(p, a), arc_length(p, b));
}

double spherical_hausdorff(const SphericalPolygon& a, const SphericalPolygon& b,
                           std::size_t samples_per_edge) {
  auto directed = [samples_per_edge](const SphericalPolygon& from, const SphericalPolygon& to) {
    double worst = 0.0;
    const std::size_t n = from.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec3& p0 = from.vertex(i);
      const Vec3& p1 = from.vertex((i + 1) % n);
      const Vec3 ortho = unit(p1 - p0 * dot(p0, p1));
      const double len = from.edge_length(i);
      for (std::size_t k = 0; k < samples_per_edge; ++k) {
        const double t = len * static_cast<double>(k) / static_cast<double>(samples_per_edge);
        const Vec3 p = p0 * std::cos(t) + ortho * std::sin(t);
        double best = kPi;
        for (std::size_t j = 0; j < to.size(); ++j) {
          best = std::min(best, point_arc_distance(p, to.vertex(j), to.vertex((j + 1) % to.size())));
        }
        worst = std::max(worst, best);
      }
    }
    return worst;
  };
  return std::max(directed(a, b), directed(b, a));
}

}  // namespace isocomb
