// Copyright 2026 The primesym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "primesym/svg.hpp"

#include <fmt/format.h>

namespace primesym {

namespace {
constexpr double kWidth = 900.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 40.0;
}  // namespace

std::string bifurcation_svg(std::span<const BifurcationPoint> points, double u_min, double u_max,
                            std::span<const double> markers) {
  const double plot_w = kWidth - 2 * kMargin;
  const double plot_h = kHeight - 2 * kMargin;
  auto px = [&](double u) { return kMargin + (u - u_min) / (u_max - u_min) * plot_w; };
  auto py = [&](double x) { return kMargin + (1.0 - x) / 2.0 * plot_h; };

  std::string out;
  out += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
      "viewBox=\"0 0 {0} {1}\">\n",
      kWidth, kHeight);
  out += fmt::format("<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n", kWidth,
                     kHeight);
  out += fmt::format(
      "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\" "
      "stroke-width=\"1\"/>\n",
      kMargin, kMargin, plot_w, plot_h);
  out += "<g fill=\"black\" fill-opacity=\"0.35\">\n";
  for (const auto& p : points) {
    out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"0.8\" height=\"0.8\"/>\n",
                       px(p.u), py(p.x));
  }
  out += "</g>\n";
  for (double m : markers) {
    if (m < u_min || m > u_max) continue;
    out += fmt::format(
        "<line x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" stroke=\"red\" "
        "stroke-width=\"1\"/>\n",
        px(m), kMargin, kMargin + plot_h);
    out += fmt::format(
        "<text x=\"{:.2f}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"11\" "
        "fill=\"red\" text-anchor=\"middle\">u={}</text>\n",
        px(m), kMargin - 6, m);
  }
  out += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\">u={}</text>\n", kMargin,
      kHeight - 12, u_min);
  out += fmt::format(
      "<text x=\"{}\" y=\"{}\" font-family=\"sans-serif\" font-size=\"12\" "
      "text-anchor=\"end\">u={}</text>\n",
      kWidth - kMargin, kHeight - 12, u_max);
  out += "</svg>\n";
  return out;
}

}  // namespace primesym
