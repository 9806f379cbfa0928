// Copyright 2026 The phasecode Authors
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

#include "phasecode_cli/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace phasecode::cli {

namespace {

constexpr double kMarginLeft = 58;
constexpr double kMarginRight = 14;
constexpr double kMarginTop = 30;
constexpr double kMarginBottom = 44;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", std::abs(v) < 1e-12 ? 0.0 : v);
  return buf;
}

std::string escape(const std::string &s) {
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

std::string dash(Stroke s) {
  switch (s) {
    case Stroke::Solid: return "";
    case Stroke::Dashed: return " stroke-dasharray=\"6 4\"";
    case Stroke::Dotted: return " stroke-dasharray=\"2 3\"";
  }
  return "";
}

double nice_step(double span) {
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 2.5, 5.0, 10.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

Panel::Panel(std::string title, std::string x_label, std::string y_label)
    : title_(std::move(title)), x_label_(std::move(x_label)), y_label_(std::move(y_label)) {}

void Panel::set_range(double x0, double x1, double y0, double y1) {
  has_range_ = true;
  x0_ = x0;
  x1_ = x1;
  y0_ = y0;
  y1_ = y1;
}

void Panel::line(const std::vector<std::pair<double, double>> &pts, const std::string &color, Stroke stroke,
                 const std::string &label) {
  series_.push_back({pts, color, stroke, label, false});
}

void Panel::markers(const std::vector<std::pair<double, double>> &pts, const std::string &color) {
  series_.push_back({pts, color, Stroke::Solid, "", true});
}

void Panel::vertical(double x, const std::string &color, Stroke stroke, const std::string &label) {
  rules_.push_back({x, color, stroke, label});
}

void Panel::autoscale(double &x0, double &x1, double &y0, double &y1) const {
  if (has_range_) {
    x0 = x0_, x1 = x1_, y0 = y0_, y1 = y1_;
    return;
  }
  x0 = y0 = std::numeric_limits<double>::infinity();
  x1 = y1 = -std::numeric_limits<double>::infinity();
  for (const Series &s : series_) {
    for (const auto &[x, y] : s.pts) {
      x0 = std::min(x0, x), x1 = std::max(x1, x);
      y0 = std::min(y0, y), y1 = std::max(y1, y);
    }
  }
  for (const Rule &r : rules_) x0 = std::min(x0, r.x), x1 = std::max(x1, r.x);
  if (!std::isfinite(x0)) x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  if (x1 - x0 < 1e-12) x0 -= 0.5, x1 += 0.5;
  if (y1 - y0 < 1e-12) y0 -= 0.5, y1 += 0.5;
  const double py = 0.05 * (y1 - y0);
  y0 -= py;
  y1 += py;
}

std::string Panel::render(double ox, double oy, double width, double height) const {
  double x0, x1, y0, y1;
  autoscale(x0, x1, y0, y1);
  double pw = width - kMarginLeft - kMarginRight;
  double ph = height - kMarginTop - kMarginBottom;
  double left = ox + kMarginLeft;
  double top = oy + kMarginTop;
  if (equal_aspect_) {
    const double scale = std::min(pw / (x1 - x0), ph / (y1 - y0));
    const double w = scale * (x1 - x0);
    const double h = scale * (y1 - y0);
    left += 0.5 * (pw - w);
    top += 0.5 * (ph - h);
    pw = w;
    ph = h;
  }
  auto px = [&](double x) { return left + (x - x0) / (x1 - x0) * pw; };
  auto py = [&](double y) { return top + ph - (y - y0) / (y1 - y0) * ph; };

  std::string s;
  s += "<g>\n";
  s += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) + "\" height=\"" + num(ph) +
       "\" fill=\"none\" stroke=\"#333\"/>\n";
  const double sx = nice_step(x1 - x0);
  for (double t = std::ceil(x0 / sx) * sx; t <= x1 + 1e-9 * sx; t += sx) {
    s += "<line x1=\"" + num(px(t)) + "\" y1=\"" + num(top + ph) + "\" x2=\"" + num(px(t)) + "\" y2=\"" +
         num(top + ph + 4) + "\" stroke=\"#333\"/>\n";
    s += "<text x=\"" + num(px(t)) + "\" y=\"" + num(top + ph + 16) +
         "\" font-size=\"10\" text-anchor=\"middle\">" + tick_label(t) + "</text>\n";
  }
  const double sy = nice_step(y1 - y0);
  for (double t = std::ceil(y0 / sy) * sy; t <= y1 + 1e-9 * sy; t += sy) {
    s += "<line x1=\"" + num(left - 4) + "\" y1=\"" + num(py(t)) + "\" x2=\"" + num(left) + "\" y2=\"" +
         num(py(t)) + "\" stroke=\"#333\"/>\n";
    s += "<text x=\"" + num(left - 6) + "\" y=\"" + num(py(t) + 3) +
         "\" font-size=\"10\" text-anchor=\"end\">" + tick_label(t) + "</text>\n";
  }
  s += "<text x=\"" + num(ox + width / 2) + "\" y=\"" + num(oy + 18) +
       "\" font-size=\"13\" text-anchor=\"middle\">" + escape(title_) + "</text>\n";
  s += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(top + ph + 34) +
       "\" font-size=\"11\" text-anchor=\"middle\">" + escape(x_label_) + "</text>\n";
  s += "<text x=\"" + num(ox + 14) + "\" y=\"" + num(top + ph / 2) +
       "\" font-size=\"11\" text-anchor=\"middle\" transform=\"rotate(-90 " + num(ox + 14) + " " +
       num(top + ph / 2) + ")\">" + escape(y_label_) + "</text>\n";

  int rule_row = 0;
  for (const Rule &r : rules_) {
    s += "<line x1=\"" + num(px(r.x)) + "\" y1=\"" + num(top) + "\" x2=\"" + num(px(r.x)) + "\" y2=\"" +
         num(top + ph) + "\" stroke=\"" + r.color + "\"" + dash(r.stroke) + "/>\n";
    if (!r.label.empty()) {
      const double ly = top + 12 + 13.0 * rule_row++;
      s += "<text x=\"" + num(px(r.x) + 3) + "\" y=\"" + num(ly) + "\" font-size=\"10\" fill=\"" + r.color + "\">" +
           escape(r.label) + "</text>\n";
    }
  }

  int labeled = 0;
  for (const Series &ser : series_) labeled += !ser.markers && !ser.pts.empty() && !ser.label.empty();
  const bool left_side = legend_ == Corner::TopLeft || legend_ == Corner::BottomLeft;
  const bool top_side = legend_ == Corner::TopLeft || legend_ == Corner::TopRight;
  const double lx = left_side ? left + 8 : left + pw - 110;
  const double ly0 = top_side ? top + 12 : top + ph - 6 - 13.0 * (labeled - 1);
  int legend_row = 0;
  for (const Series &ser : series_) {
    if (ser.markers) {
      for (const auto &[x, y] : ser.pts) {
        s += "<circle cx=\"" + num(px(x)) + "\" cy=\"" + num(py(y)) + "\" r=\"2.5\" fill=\"" + ser.color + "\"/>\n";
      }
      continue;
    }
    if (ser.pts.empty()) continue;
    s += "<polyline fill=\"none\" stroke=\"" + ser.color + "\" stroke-width=\"1.4\"" + dash(ser.stroke) +
         " points=\"";
    for (const auto &[x, y] : ser.pts) s += num(px(x)) + "," + num(py(y)) + " ";
    s += "\"/>\n";
    if (!ser.label.empty()) {
      const double ly = ly0 + 13.0 * legend_row++;
      s += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly - 3) + "\" x2=\"" + num(lx + 18) + "\" y2=\"" +
           num(ly - 3) + "\" stroke=\"" + ser.color + "\"" + dash(ser.stroke) + "/>\n";
      s += "<text x=\"" + num(lx + 22) + "\" y=\"" + num(ly) + "\" font-size=\"10\">" + escape(ser.label) +
           "</text>\n";
    }
  }
  s += "</g>\n";
  return s;
}

std::string render_svg(const std::vector<Panel> &panels, double panel_width, double panel_height) {
  const double width = panel_width * static_cast<double>(std::max<size_t>(panels.size(), 1));
  std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" + num(panel_height) +
       "\" viewBox=\"0 0 " + num(width) + " " + num(panel_height) + "\" font-family=\"sans-serif\">\n";
  s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (size_t k = 0; k < panels.size(); ++k) {
    s += panels[k].render(panel_width * static_cast<double>(k), 0, panel_width, panel_height);
  }
  s += "</svg>\n";
  return s;
}

std::string palette(size_t k) {
  static const char *colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd",
                                 "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};
  return colors[k % (sizeof colors / sizeof colors[0])];
}

}  // namespace phasecode::cli
