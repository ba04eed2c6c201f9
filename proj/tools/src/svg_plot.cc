//
// Copyright 2026 The Rainbow DP Authors
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
//

#include "rainbow_dp/cli/svg_plot.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <vector>

#include "absl/strings/str_cat.h"

namespace rainbow_dp {
namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 500;
constexpr double kLeft = 60.0;
constexpr double kRight = 150.0;  // room for the legend
constexpr double kTop = 30.0;
constexpr double kBottom = 50.0;

constexpr const char* kPalette[] = {
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
    "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf",
};

std::string Fixed(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", x);
  return buf;
}

std::string Escape(const std::string& s) {
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

struct Series {
  std::string color_name;
  std::vector<std::pair<double, double>> points;
};

}  // namespace

std::string RenderTrajectorySvg(const TrajectoryTable& table,
                                const std::optional<TauProfile>& tau) {
  std::map<int, Series> series;
  double t_max = 0.0;
  for (const TrajectoryRow& row : table) {
    Series& s = series[row.k];
    s.color_name = row.color;
    s.points.emplace_back(row.t, row.p);
    t_max = std::max(t_max, row.t);
  }
  const double span = t_max > 0.0 ? t_max : 1.0;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto x_of = [&](double t) { return kLeft + plot_w * t / span; };
  auto y_of = [&](double p) {
    return kTop + plot_h * (1.0 - std::clamp(p, 0.0, 1.0));
  };

  std::string svg = absl::StrCat(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"", kWidth,
      "\" height=\"", kHeight, "\" viewBox=\"0 0 ", kWidth, " ", kHeight,
      "\">\n",
      "<rect x=\"0\" y=\"0\" width=\"", kWidth, "\" height=\"", kHeight,
      "\" fill=\"white\"/>\n");

  // Axes and ticks.
  const double x0 = kLeft, x1 = kLeft + plot_w, y0 = kTop + plot_h, y1 = kTop;
  absl::StrAppend(&svg, "<g class=\"axes\" stroke=\"black\" fill=\"none\">\n",
                  "<line x1=\"", Fixed(x0), "\" y1=\"", Fixed(y0), "\" x2=\"",
                  Fixed(x1), "\" y2=\"", Fixed(y0), "\"/>\n", "<line x1=\"",
                  Fixed(x0), "\" y1=\"", Fixed(y0), "\" x2=\"", Fixed(x0),
                  "\" y2=\"", Fixed(y1), "\"/>\n</g>\n");
  absl::StrAppend(&svg, "<g class=\"ticks\" font-family=\"sans-serif\" "
                        "font-size=\"11\" fill=\"black\">\n");
  for (int i = 0; i <= 5; ++i) {
    const double p = i / 5.0;
    absl::StrAppend(&svg, "<text x=\"", Fixed(x0 - 8), "\" y=\"",
                    Fixed(y_of(p) + 4), "\" text-anchor=\"end\">", Fixed(p),
                    "</text>\n");
    const double t = span * i / 5.0;
    absl::StrAppend(&svg, "<text x=\"", Fixed(x_of(t)), "\" y=\"",
                    Fixed(y0 + 16), "\" text-anchor=\"middle\">", Fixed(t),
                    "</text>\n");
  }
  absl::StrAppend(&svg, "<text x=\"", Fixed(kLeft + plot_w / 2), "\" y=\"",
                  Fixed(kHeight - 12.0), "\" text-anchor=\"middle\">t</text>\n",
                  "<text x=\"16\" y=\"", Fixed(kTop + plot_h / 2),
                  "\" text-anchor=\"middle\" transform=\"rotate(-90 16 ",
                  Fixed(kTop + plot_h / 2), ")\">probability</text>\n</g>\n");

  if (tau.has_value()) {
    for (size_t k = 0; k < tau->tau.size(); ++k) {
      if (tau->IsInfinite(static_cast<int>(k))) continue;
      const double t = static_cast<double>(tau->tau[k]);
      if (t > t_max) continue;
      absl::StrAppend(&svg, "<line class=\"tau\" data-k=\"", k + 1,
                      "\" x1=\"", Fixed(x_of(t)), "\" y1=\"", Fixed(y0),
                      "\" x2=\"", Fixed(x_of(t)), "\" y2=\"", Fixed(y1),
                      "\" stroke=\"", kPalette[k % 10],
                      "\" stroke-dasharray=\"4 4\"/>\n");
    }
  }

  int index = 0;
  for (const auto& [k, s] : series) {
    const char* color = kPalette[(k - 1) % 10];
    std::string points;
    for (const auto& [t, p] : s.points) {
      if (!points.empty()) points += " ";
      absl::StrAppend(&points, Fixed(x_of(t)), ",", Fixed(y_of(p)));
    }
    absl::StrAppend(&svg, "<polyline class=\"series\" data-k=\"", k,
                    "\" fill=\"none\" stroke=\"", color,
                    "\" stroke-width=\"1.5\" points=\"", points, "\"/>\n");
    if (s.points.size() == 1) {
      absl::StrAppend(&svg, "<circle class=\"point\" cx=\"",
                      Fixed(x_of(s.points[0].first)), "\" cy=\"",
                      Fixed(y_of(s.points[0].second)), "\" r=\"3\" fill=\"",
                      color, "\"/>\n");
    }
    const double ly = kTop + 10.0 + 18.0 * index;
    const double lx = kLeft + plot_w + 20.0;
    absl::StrAppend(&svg, "<g class=\"legend\">\n<line x1=\"", Fixed(lx),
                    "\" y1=\"", Fixed(ly), "\" x2=\"", Fixed(lx + 20),
                    "\" y2=\"", Fixed(ly), "\" stroke=\"", color,
                    "\" stroke-width=\"2\"/>\n<text x=\"", Fixed(lx + 26),
                    "\" y=\"", Fixed(ly + 4),
                    "\" font-family=\"sans-serif\" font-size=\"12\">",
                    Escape(s.color_name), "</text>\n</g>\n");
    ++index;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace rainbow_dp
