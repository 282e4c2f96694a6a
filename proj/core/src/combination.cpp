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


#include "isocomb/combination.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "isocomb/error.hpp"

namespace isocomb {
namespace {

double signed_turn(const Vec2& from, const Vec2& to) {
  return std::atan2(cross(from, to), dot(from, to));
}

Vec2 sample(const PlanarPolygon& f, std::optional<std::size_t> vertex, double s) {
  return vertex ? f.vertex(*vertex) : point_at(f, s);
}

// Edges adjacent to s on f, preferring an explicit vertex index.
void adjacent_edges(const PlanarPolygon& f, std::optional<std::size_t> vertex, double s,
                    std::size_t& in, std::size_t& out) {
  if (vertex) {
    out = *vertex;
    in = (*vertex + f.size() - 1) % f.size();
    return;
  }
  out = in = f.locate(s).edge;
}

struct EventPoints {
  Vec2 r1;
  Vec2 r2;
};

EventPoints points_of(const MarkedPair& pair, const CorrespondenceEvent& ev) {
  return {sample(pair.F1, ev.v1, ev.s), pair.motion(sample(pair.F2, ev.v2, ev.s))};
}

CombinedCurve assemble(std::vector<double> s, std::vector<Vec2> r1, std::vector<Vec2> r2,
                       double perimeter, const Tolerances& tol) {
  CombinedCurve out;
  out.breakpoints = std::move(s);
  out.curve.reserve(r1.size());
  out.tau_segments.reserve(r1.size());
  for (std::size_t i = 0; i < r1.size(); ++i) {
    out.curve.push_back(r1[i] + r2[i]);
    out.tau_segments.push_back(r1[i] - r2[i]);
  }
  out.first = std::move(r1);
  out.second = std::move(r2);
  out.certificate = certify_curve(out.curve, tol.certificate, kLengthEpsRel * perimeter);
  return out;
}

}  // namespace

std::string_view to_string(EventCase c) {
  switch (c) {
    case EventCase::kEdgeEdge: return "edge-edge";
    case EventCase::kVertexEdge: return "vertex-edge";
    case EventCase::kVertexVertex: return "vertex-vertex";
  }
  return "unknown";
}

MarkedPair make_pair(PlanarPolygon F1, PlanarPolygon F2, const Tolerances& tol) {
  if (!(F1.signed_area() > 0.0) || !(F2.signed_area() > 0.0)) {
    throw GeometryError(ErrorCode::kOrientationMismatch, "both curves must be counterclockwise");
  }
  const double p1 = F1.perimeter();
  const double p2 = F2.perimeter();
  if (std::abs(p1 - p2) > tol.perimeter_rel * p1) {
    throw GeometryError(ErrorCode::kPerimeterMismatch,
                        "perimeters " + std::to_string(p1) + " and " + std::to_string(p2));
  }
  return {std::move(F1), std::move(F2), RigidMotion2::identity()};
}

std::vector<CorrespondenceEvent> correspondence_events(const MarkedPair& pair, double merge_rel) {
  struct Raw {
    double pos;
    int poly;
    std::size_t index;
  };
  const double eps = merge_rel * pair.perimeter();
  std::vector<Raw> raw;
  raw.reserve(pair.F1.size() + pair.F2.size());
  auto collect = [&](const PlanarPolygon& f, int poly) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      double pos = f.vertex_position(i);
      if (pos >= f.perimeter() - eps) pos = 0.0;
      raw.push_back({pos, poly, i});
    }
  };
  collect(pair.F1, 1);
  collect(pair.F2, 2);
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    if (a.pos != b.pos) return a.pos < b.pos;
    if (a.poly != b.poly) return a.poly < b.poly;
    return a.index < b.index;
  });

  std::vector<CorrespondenceEvent> events(1);
  std::vector<double> anchors{0.0};
  for (const Raw& r : raw) {
    CorrespondenceEvent* ev = &events.back();
    auto& slot = r.poly == 1 ? ev->v1 : ev->v2;
    if (r.pos - anchors.back() > eps || slot) {
      events.emplace_back();
      anchors.push_back(r.pos);
      ev = &events.back();
    }
    (r.poly == 1 ? ev->v1 : ev->v2) = r.index;
  }

  for (std::size_t k = 0; k < events.size(); ++k) {
    CorrespondenceEvent& ev = events[k];
    if (k == 0) {
      ev.s = 0.0;
    } else if (ev.v1) {
      ev.s = wrap_arc(pair.F1.vertex_position(*ev.v1), pair.perimeter());
    } else if (ev.v2) {
      ev.s = pair.F2.vertex_position(*ev.v2);
    } else {
      ev.s = anchors[k];
    }
    adjacent_edges(pair.F1, ev.v1, ev.s, ev.in1, ev.out1);
    adjacent_edges(pair.F2, ev.v2, ev.s, ev.in2, ev.out2);
  }
  return events;
}

Angle semitangent_condition(const MarkedPair& pair, const Tolerances& tol) {
  const auto events = correspondence_events(pair, tol.breakpoint_merge_rel);
  double worst = 0.0;
  auto gap = [&](std::size_t e1, std::size_t e2) {
    const Vec2 d2 = pair.motion.rotate(pair.F2.edge_direction(e2));
    worst = std::max(worst, angle_between(pair.F1.edge_direction(e1), d2).radians);
  };
  for (std::size_t k = 0; k < events.size(); ++k) {
    gap(events[k].out1, events[k].out2);
    const double next = k + 1 < events.size() ? events[k + 1].s : pair.perimeter();
    const double mid = 0.5 * (events[k].s + next);
    gap(pair.F1.locate(mid).edge, pair.F2.locate(mid).edge);
  }
  return Angle(kPi - worst);
}

CombinedCurve combine(const MarkedPair& pair, const Tolerances& tol) {
  const auto events = correspondence_events(pair, tol.breakpoint_merge_rel);
  std::vector<double> s;
  std::vector<Vec2> r1, r2;
  s.reserve(events.size());
  r1.reserve(events.size());
  r2.reserve(events.size());
  for (const auto& ev : events) {
    const EventPoints p = points_of(pair, ev);
    s.push_back(ev.s);
    r1.push_back(p.r1);
    r2.push_back(p.r2);
  }
  return assemble(std::move(s), std::move(r1), std::move(r2), pair.perimeter(), tol);
}

CombinedCurve combine_sampled(const MarkedPair& pair, std::size_t n, const Tolerances& tol) {
  if (n < 3) throw GeometryError(ErrorCode::kInvalidArgument, "combine_sampled needs n >= 3");
  std::vector<double> s(n);
  std::vector<Vec2> r1(n), r2(n);
  for (std::size_t k = 0; k < n; ++k) {
    s[k] = pair.perimeter() * static_cast<double>(k) / static_cast<double>(n);
    r1[k] = point_at(pair.F1, s[k]);
    r2[k] = pair.motion(point_at(pair.F2, s[k]));
  }
  return assemble(std::move(s), std::move(r1), std::move(r2), pair.perimeter(), tol);
}

std::vector<CombinationVertexEvent> vertex_events(const MarkedPair& pair, const Tolerances& tol) {
  const auto events = correspondence_events(pair, tol.breakpoint_merge_rel);
  std::vector<CombinationVertexEvent> out;
  out.reserve(events.size());
  for (const auto& ev : events) {
    const Vec2 in1 = pair.F1.edge_direction(ev.in1);
    const Vec2 out1 = pair.F1.edge_direction(ev.out1);
    const Vec2 in2 = pair.motion.rotate(pair.F2.edge_direction(ev.in2));
    const Vec2 out2 = pair.motion.rotate(pair.F2.edge_direction(ev.out2));

    CombinationVertexEvent e;
    e.s = ev.s;
    e.beta1 = Angle(ev.v1 ? kPi - pair.F1.exterior_angle(*ev.v1) : kPi);
    e.beta2 = Angle(ev.v2 ? kPi - pair.F2.exterior_angle(*ev.v2) : kPi);
    e.beta = Angle(kPi - signed_turn(in1 + in2, out1 + out2));
    if (ev.v1 && ev.v2) {
      e.case_id = EventCase::kVertexVertex;
    } else if (ev.v1 || ev.v2) {
      e.case_id = EventCase::kVertexEdge;
      const bool first_is_vertex = ev.v1.has_value();
      const Vec2& edge = first_is_vertex ? out2 : out1;
      const Vec2& v_in = first_is_vertex ? in1 : in2;
      const Vec2& v_out = first_is_vertex ? out1 : out2;
      e.alpha = Angle(signed_turn(edge, v_out));
      e.delta = Angle(signed_turn(v_in, edge));
      e.gamma = first_is_vertex ? e.beta1 : e.beta2;
    }
    out.push_back(e);
  }
  return out;
}

AlignmentResult align(const MarkedPair& pair, const Tolerances& tol) {
  const auto events = correspondence_events(pair, tol.breakpoint_merge_rel);
  const std::size_t m = events.size();

  // Unwrapped right semi-tangent directions at each breakpoint.
  std::vector<double> g(m);
  double phi1 = direction(pair.F1.edge_direction(events[0].out1));
  double phi2 = direction(pair.motion.rotate(pair.F2.edge_direction(events[0].out2)));
  g[0] = phi1 - phi2;
  for (std::size_t k = 1; k < m; ++k) {
    if (events[k].v1) phi1 += pair.F1.exterior_angle(*events[k].v1);
    if (events[k].v2) phi2 += pair.F2.exterior_angle(*events[k].v2);
    g[k] = phi1 - phi2;
  }
  const auto [gmin_it, gmax_it] = std::minmax_element(g.begin(), g.end());
  const double gmin = *gmin_it;
  const double gmax = *gmax_it;

  std::size_t best = 0;
  double best_margin = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < m; ++j) {
    const double margin = kPi - std::max(gmax - g[j], g[j] - gmin);
    if (margin > best_margin + 1e-12) {
      best_margin = margin;
      best = j;
    }
  }
  if (!(best_margin > tol.margin)) {
    throw GeometryError(ErrorCode::kAlignmentNotFound,
                        "best margin " + std::to_string(best_margin));
  }

  const CorrespondenceEvent& ev = events[best];
  const EventPoints p = points_of(pair, ev);
  const double theta = g[best];
  const RigidMotion2 turn{Angle::normalized(theta), p.r1 - rotated(p.r2, theta)};

  AlignmentResult result;
  result.sigma0 = ev.s;
  result.motion = compose(turn, pair.motion);
  result.margin = Angle(best_margin);
  result.g_values = std::move(g);
  result.aligned = {pair.F1.rebased(pair.F1.base_s() + ev.s),
                    pair.F2.rebased(pair.F2.base_s() + ev.s), result.motion};
  return result;
}

std::pair<AlignmentResult, CombinedCurve> combine_aligned(const MarkedPair& pair,
                                                          const Tolerances& tol) {
  AlignmentResult a = align(pair, tol);
  CombinedCurve c = combine(a.aligned, tol);
  return {std::move(a), std::move(c)};
}

double bending_check(const CombinedCurve& combined, double floor_eps) {
  const std::size_t n = combined.first.size();
  double worst = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t next = (k + 1) % n;
    const Vec2 d1 = combined.first[next] - combined.first[k];
    const Vec2 d2 = combined.second[next] - combined.second[k];
    const Vec2 dr = d1 + d2;
    const Vec2 dtau = d1 - d2;
    const double dr_len = norm(dr);
    const double dtau_len = norm(dtau);
    if (dtau_len <= 1e-12 * dr_len) continue;
    const double inner = norm2(d1) - norm2(d2);
    worst = std::max(worst, std::abs(inner) / (dr_len * dtau_len + floor_eps));
  }
  return worst;
}

}  // namespace isocomb
