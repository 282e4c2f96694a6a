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


#include "isocomb/harness/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>

#include "isocomb/error.hpp"

namespace isocomb::harness {
namespace {

constexpr std::array<const char*, 6> kColors = {"#1f77b4", "#d62728", "#2ca02c",
                                                "#9467bd", "#ff7f0e", "#17becf"};

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

SvgCurve svg_curve(std::string label, const PlanarPolygon& f) {
  return {std::move(label), std::vector<Vec2>(f.vertices().begin(), f.vertices().end())};
}

SvgCurve svg_curve(std::string label, std::span<const Vec2> points) {
  return {std::move(label), std::vector<Vec2>(points.begin(), points.end())};
}

SvgCurve svg_curve(std::string label, const SphericalPolygon& m) {
  SvgCurve c{std::move(label), {}};
  for (const Vec3& v : m.vertices()) c.points.push_back(v.tangential());
  return c;
}

std::string render_svg(std::span<const SvgCurve> curves) {
  if (curves.empty()) throw GeometryError(ErrorCode::kEmptyInput, "no curves to render");
  double lo_x = std::numeric_limits<double>::infinity(), lo_y = lo_x;
  double hi_x = -lo_x, hi_y = -lo_x;
  for (const SvgCurve& c : curves) {
    for (const Vec2& p : c.points) {
      lo_x = std::min(lo_x, p.x);
      hi_x = std::max(hi_x, p.x);
      lo_y = std::min(lo_y, p.y);
      hi_y = std::max(hi_y, p.y);
    }
  }
  if (!(lo_x <= hi_x)) throw GeometryError(ErrorCode::kEmptyInput, "curves have no points");
  const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-12});
  const double pad = 0.05 * span;
  const double w = hi_x - lo_x + 2 * pad;
  const double h = hi_y - lo_y + 2 * pad;
  const double stroke = 0.004 * std::max(w, h);

  // y is flipped so the plot has the usual mathematical orientation.
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"" + fixed(lo_x - pad) +
         " " + fixed(-hi_y - pad) + " " + fixed(w) + " " + fixed(h) + "\">\n";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    out += "  <polygon fill=\"none\" stroke=\"" + std::string(kColors[i % kColors.size()]) +
           "\" stroke-width=\"" + fixed(stroke) + "\" points=\"";
    for (std::size_t k = 0; k < curves[i].points.size(); ++k) {
      if (k > 0) out += ' ';
      out += fixed(curves[i].points[k].x) + "," + fixed(-curves[i].points[k].y);
    }
    out += "\"/>\n";
  }
  const double font = 0.035 * std::max(w, h);
  out += "  <g font-family=\"sans-serif\" font-size=\"" + fixed(font) + "\">\n";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    out += "    <text x=\"" + fixed(lo_x) + "\" y=\"" +
           fixed(-hi_y + font * static_cast<double>(i + 1)) + "\" fill=\"" +
           kColors[i % kColors.size()] + "\">" + escape(curves[i].label) + "</text>\n";
  }
  out += "  </g>\n</svg>\n";
  return out;
}

}  // namespace isocomb::harness
