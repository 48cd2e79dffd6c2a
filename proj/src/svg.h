// Copyright 2026 The ExpertAudit Authors.
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

// Minimal SVG 1.1 writer and plot axes for the report figures.

#ifndef EXPERTAUDIT_SRC_SVG_H_
#define EXPERTAUDIT_SRC_SVG_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace expertaudit::svg {

std::string Escape(std::string_view text);

class Document {
 public:
  Document(double width, double height);

  void Rect(double x, double y, double w, double h, std::string_view fill,
            std::string_view stroke = "none");
  void Line(double x1, double y1, double x2, double y2, std::string_view stroke,
            double width = 1.0);
  void Circle(double cx, double cy, double r, std::string_view fill,
              std::string_view stroke = "none");
  // anchor is start, middle or end.
  void Text(double x, double y, std::string_view text, double size = 12,
            std::string_view anchor = "start", double rotate = 0);
  void Polyline(const std::vector<std::pair<double, double>> &points,
                std::string_view stroke, double width = 1.5);
  void Path(std::string_view d, std::string_view fill,
            std::string_view stroke = "none");

  std::string Render() const;

 private:
  double width_;
  double height_;
  std::string body_;
};

// Maps data coordinates into a plot rectangle. Log axes take base-10 logs
// and require positive values.
class Axes {
 public:
  Axes(double left, double top, double width, double height);

  void SetX(double lo, double hi, bool log = false);
  void SetY(double lo, double hi, bool log = false);

  double X(double v) const;
  double Y(double v) const;

  double left() const { return left_; }
  double top() const { return top_; }
  double right() const { return left_ + width_; }
  double bottom() const { return top_ + height_; }
  double width() const { return width_; }
  double height() const { return height_; }

  // Frame, ticks and labels. Log axes get decade ticks.
  void Draw(Document &doc, std::string_view x_label, std::string_view y_label,
            int x_ticks = 5, int y_ticks = 5) const;

 private:
  double Map(double v, double lo, double hi, bool log) const;

  double left_, top_, width_, height_;
  double x_lo_ = 0, x_hi_ = 1, y_lo_ = 0, y_hi_ = 1;
  bool x_log_ = false, y_log_ = false;
};

// Short tick label ("0.25", "100", "1e+03").
std::string TickLabel(double v);

}  // namespace expertaudit::svg

#endif  // EXPERTAUDIT_SRC_SVG_H_
