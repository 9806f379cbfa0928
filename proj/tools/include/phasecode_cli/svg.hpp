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

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace phasecode::cli {

enum class Stroke { Solid, Dashed, Dotted };
enum class Corner { TopLeft, TopRight, BottomLeft, BottomRight };

/// One set of axes. Coordinates are data units; the panel maps them to pixels.
class Panel {
 public:
  Panel(std::string title, std::string x_label, std::string y_label);

  void set_range(double x0, double x1, double y0, double y1);
  /// Same data-to-pixel scale on both axes.
  void set_equal_aspect(bool on) { equal_aspect_ = on; }
  void set_legend_corner(Corner c) { legend_ = c; }

  void line(const std::vector<std::pair<double, double>> &pts, const std::string &color, Stroke stroke = Stroke::Solid,
            const std::string &label = "");
  void markers(const std::vector<std::pair<double, double>> &pts, const std::string &color);
  void vertical(double x, const std::string &color, Stroke stroke, const std::string &label);

  /// Renders into a width x height box with its top-left corner at (ox, oy).
  std::string render(double ox, double oy, double width, double height) const;

 private:
  struct Series {
    std::vector<std::pair<double, double>> pts;
    std::string color;
    Stroke stroke;
    std::string label;
    bool markers;
  };
  struct Rule {
    double x;
    std::string color;
    Stroke stroke;
    std::string label;
  };

  void autoscale(double &x0, double &x1, double &y0, double &y1) const;

  std::string title_, x_label_, y_label_;
  bool has_range_ = false;
  bool equal_aspect_ = false;
  Corner legend_ = Corner::TopRight;
  double x0_ = 0, x1_ = 1, y0_ = 0, y1_ = 1;
  std::vector<Series> series_;
  std::vector<Rule> rules_;
};

/// Lays panels out left to right and returns a standalone SVG document.
std::string render_svg(const std::vector<Panel> &panels, double panel_width = 420, double panel_height = 360);

/// Color of the k-th series.
std::string palette(size_t k);

}  // namespace phasecode::cli
