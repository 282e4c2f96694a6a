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


#include "isocomb/cones.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "isocomb/error.hpp"

namespace isocomb {
namespace {

constexpr double kMinCenteredHeight = 0.01;

void check_perimeters(const SphericalPolygon& a, const SphericalPolygon& b, const Tolerances& tol) {
  if (std::abs(a.perimeter() - b.perimeter()) > tol.perimeter_rel * a.perimeter()) {
    throw GeometryError(ErrorCode::kPerimeterMismatch,
                        "link lengths " + std::to_string(a.perimeter()) + " and " +
                            std::to_string(b.perimeter()));
  }
}

Vec3 link_point(const SphericalPolygon& m, std::optional<std::size_t> vertex, double s) {
  return vertex ? m.vertex(*vertex) : sph_point_at(m, s);
}

double min_height(const SphericalPolygon& m, const Rotation3& r) {
  double h = std::numeric_limits<double>::infinity();
  for (const Vec3& v : m.vertices()) h = std::min(h, r(v).x0);
  return h;
}

}  // namespace

ConvexCone3 cone_from_link(SphericalPolygon link) { return {std::move(link)}; }

std::pair<Vec2, Vec2> pogorelov_forward(const Vec3& r1, const Vec3& r2, double height_eps) {
  const double denom = r1.x0 + r2.x0;
  if (!(denom > height_eps)) {
    throw GeometryError(ErrorCode::kNonPositiveHeight, "x0 sum " + std::to_string(denom));
  }
  return {r1.tangential() / denom, r2.tangential() / denom};
}

Vec3 pogorelov_inverse(const Vec2& w) {
  const double x0 = 1.0 / std::sqrt(1.0 + norm2(w));
  return {x0, w.x * x0, w.y * x0};
}

double pogorelov_identity_check(const Vec3& r1, const Vec3& r2, double height_eps) {
  const auto [t1, t2] = pogorelov_forward(r1, r2, height_eps);
  const Vec3 a = pogorelov_inverse(t1 + t2);
  const Vec2 bar = r1.tangential() + r2.tangential();
  const double scale = std::sqrt(2.0 * (1.0 + dot(r1, r2)));
  const Vec3 b = Vec3{r1.x0 + r2.x0, bar.x, bar.y} / scale;
  const Vec3 sum = r1 + r2;
  const Vec3 c = sum / norm(sum);
  auto max_abs = [](const Vec3& d) {
    return std::max({std::abs(d.x0), std::abs(d.x1), std::abs(d.x2)});
  };
  return std::max({max_abs(a - b), max_abs(a - c), max_abs(b - c)});
}

std::vector<LinkEvent> link_events(const SphericalPolygon& m1, const SphericalPolygon& m2,
                                   double merge_rel) {
  struct Raw {
    double pos;
    int poly;
    std::size_t index;
  };
  const double eps = merge_rel * m1.perimeter();
  std::vector<Raw> raw;
  auto collect = [&](const SphericalPolygon& m, int poly) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      double pos = m.vertex_position(i);
      if (pos >= m.perimeter() - eps) pos = 0.0;
      raw.push_back({pos, poly, i});
    }
  };
  collect(m1, 1);
  collect(m2, 2);
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.index < b.index;
  });

  std::vector<LinkEvent> events(1);
  double anchor = 0.0;
  for (const Raw& r : raw) {
    auto* slot = r.poly == 1 ? &events.back().v1 : &events.back().v2;
    if (r.pos - anchor > eps || slot->has_value()) {
      events.push_back({r.pos, std::nullopt, std::nullopt});
      anchor = r.pos;
      slot = r.poly == 1 ? &events.back().v1 : &events.back().v2;
    }
    *slot = r.index;
  }
  for (std::size_t k = 1; k < events.size(); ++k) {
    if (events[k].v1) events[k].s = m1.vertex_position(*events[k].v1);
  }
  return events;
}

PogorelovImage transform_link_pair(const SphericalPolygon& m1, const SphericalPolygon& m2,
                                   const Tolerances& tol, const TransformOptions& opt) {
  check_perimeters(m1, m2, tol);
  if (opt.subdivisions == 0) {
    throw GeometryError(ErrorCode::kInvalidArgument, "subdivisions must be positive");
  }
  const auto events = link_events(m1, m2, tol.breakpoint_merge_rel);
  const double p = m1.perimeter();
  const double max_step = p / static_cast<double>(opt.subdivisions);

  PogorelovImage image;
  auto emit = [&](double s, const Vec3& r1, const Vec3& r2) {
    const auto [t1, t2] = pogorelov_forward(r1, r2, tol.height);
    image.s.push_back(s);
    image.x0_sums.push_back(r1.x0 + r2.x0);
    image.projections.emplace_back(r1.tangential(), r2.tangential());
    image.tilde1.push_back(t1);
    image.tilde2.push_back(t2);
  };
  for (std::size_t k = 0; k < events.size(); ++k) {
    const LinkEvent& ev = events[k];
    const double next = k + 1 < events.size() ? events[k + 1].s : p;
    const double len = next - ev.s;
    const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil(len / max_step - 1e-9)));
    emit(ev.s, link_point(m1, ev.v1, ev.s), link_point(m2, ev.v2, ev.s));
    for (std::size_t i = 1; i < pieces; ++i) {
      const double s = ev.s + len * static_cast<double>(i) / static_cast<double>(pieces);
      emit(s, sph_point_at(m1, s), sph_point_at(m2, s));
    }
  }

  if (opt.build_planar) {
    try {
      image.planar1 = build_polygon(image.tilde1, 0.0);
      image.planar2 = build_polygon(image.tilde2, 0.0);
    } catch (const GeometryError& e) {
      throw GeometryError(ErrorCode::kNotConvexPlanar, e.what());
    }
  }
  return image;
}

double segment_mismatch(const PogorelovImage& image) {
  const std::size_t n = image.tilde1.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = (k + 1) % n;
    const double l1 = norm(image.tilde1[j] - image.tilde1[k]);
    const double l2 = norm(image.tilde2[j] - image.tilde2[k]);
    worst = std::max(worst, std::abs(l1 - l2));
  }
  return worst;
}

ConvexCone3 combine_cones(const ConvexCone3& k1, const ConvexCone3& k2, const Tolerances& tol) {
  check_perimeters(k1.link, k2.link, tol);
  const auto events = link_events(k1.link, k2.link, tol.breakpoint_merge_rel);
  std::vector<Vec3> link;
  link.reserve(events.size());
  for (const LinkEvent& ev : events) {
    const Vec3 sum = link_point(k1.link, ev.v1, ev.s) + link_point(k2.link, ev.v2, ev.s);
    if (norm(sum) < 1e-12) {
      throw GeometryError(ErrorCode::kAntipodalCorrespondence, "at s = " + std::to_string(ev.s));
    }
    link.push_back(unit_fixed_point(sum));
  }
  return {make_spherical_polygon(std::move(link), 0.0, tol)};
}

Rotation3 centering_rotation(const SphericalPolygon& link) {
  Vec3 center = sph_centroid(link);
  Rotation3 r = Rotation3::from_to(center, kAxisX0);
  if (min_height(link, r) >= kMinCenteredHeight) return r;

  // Smallest enclosing cap: repeatedly pull the center toward the lowest vertex.
  for (int it = 1; it <= 20000; ++it) {
    std::size_t lowest = 0;
    double h = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < link.size(); ++i) {
      const double d = dot(center, link.vertex(i));
      if (d < h) {
        h = d;
        lowest = i;
      }
    }
    center = center + link.vertex(lowest) * (1.0 / (it + 1.0));
    center = center / norm(center);
  }
  return Rotation3::from_to(center, kAxisX0);
}

ConePositioning position_cones(const ConvexCone3& k1, const ConvexCone3& k2, const Tolerances& tol,
                               const TransformOptions& opt) {
  check_perimeters(k1.link, k2.link, tol);
  const Rotation3 c1 = centering_rotation(k1.link);
  const Rotation3 c2 = centering_rotation(k2.link);
  const ConvexCone3 centered1{k1.link.rotated(c1)};
  const ConvexCone3 centered2{k2.link.rotated(c2)};

  TransformOptions topt = opt;
  topt.build_planar = false;
  const PogorelovImage image = transform_link_pair(centered1.link, centered2.link, tol, topt);

  // Unwrapped segment directions of both planar images and their difference.
  const std::size_t n = image.tilde1.size();
  std::vector<double> d(n);
  double theta1 = 0.0, theta2 = 0.0, prev1 = 0.0, prev2 = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = (k + 1) % n;
    const double a1 = direction(image.tilde1[j] - image.tilde1[k]);
    const double a2 = direction(image.tilde2[j] - image.tilde2[k]);
    if (k == 0) {
      theta1 = a1;
      theta2 = a2;
    } else {
      theta1 += normalize_angle(a1 - prev1);
      theta2 += normalize_angle(a2 - prev2);
    }
    prev1 = a1;
    prev2 = a2;
    d[k] = theta2 - theta1;
  }
  const auto [dmin_it, dmax_it] = std::minmax_element(d.begin(), d.end());
  const double dmin = *dmin_it;
  const double dmax = *dmax_it;

  ConePositioning result;
  std::vector<double> tried;
  double best_margin = -kPi;
  std::string last_failure = "no candidate with positive margin";
  for (std::size_t j = 0; j < n; ++j) {
    const double margin = kPi - std::max(dmax - d[j], d[j] - dmin);
    best_margin = std::max(best_margin, margin);
    if (!(margin > tol.margin)) continue;
    const double psi = normalize_angle(d[j]);
    if (std::any_of(tried.begin(), tried.end(),
                    [psi](double t) { return std::abs(normalize_angle(t - psi)) < 1e-12; })) {
      continue;
    }
    tried.push_back(psi);

    const Rotation3 spin = Rotation3::about_x0(Angle(psi));
    ConvexCone3 turned{centered1.link.rotated(spin)};
    ConvexCone3 combined;
    try {
      combined = combine_cones(turned, centered2, tol);
    } catch (const GeometryError& e) {
      last_failure = e.what();
      continue;
    }
    const SphericalCertificate& cert = combined.link.certificate();
    if (!cert.is_convex) {
      last_failure = "candidate psi " + std::to_string(psi) + ": min turning " +
                     std::to_string(cert.min_turning) + ", Gauss-Bonnet residual " +
                     std::to_string(cert.gauss_bonnet_residual);
      continue;
    }
    result.psi = Angle(psi);
    result.sigma0 = image.s[j];
    result.margin = margin;
    result.frame1 = spin * c1;
    result.frame2 = c2;
    result.positioned1 = std::move(turned);
    result.positioned2 = centered2;
    result.combined = std::move(combined);
    result.candidates_tried = tried.size();
    return result;
  }
  throw GeometryError(ErrorCode::kPositioningNotFound,
                      std::to_string(tried.size()) + " candidates tried, best margin " +
                          std::to_string(best_margin) + "; " + last_failure);
}

}  // namespace isocomb
