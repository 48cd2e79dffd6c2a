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

#include "svg.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace expertaudit::svg {
namespace {

std::string Fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

std::string Escape(std::string_view text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        // Control characters are not allowed in XML 1.0.
        if (static_cast<unsigned char>(c) < 0x20 && c != '\t' && c != '\n') continue;
        out += c;
    }
  }
  return out;
}

std::string TickLabel(double v) {
  char buf[32];
  if (v != 0 && (std::fabs(v) >= 1e5 || std::fabs(v) < 1e-3)) {
    std::snprintf(buf, sizeof buf, "%.0e", v);
  } else {
    std::snprintf(buf, sizeof buf, "%.3g", v);
  }
  return buf;
}

Document::Document(double width, double height) : width_(width), height_(height) {}

void Document::Rect(double x, double y, double w, double h, std::string_view fill,
                    std::string_view stroke) {
  body_ += "<rect x=\"" + Fmt(x) + "\" y=\"" + Fmt(y) + "\" width=\"" +
           Fmt(std::max(0.0, w)) + "\" height=\"" + Fmt(std::max(0.0, h)) +
           "\" fill=\"" + std::string(fill) + "\" stroke=\"" + std::string(stroke) +
           "\"/>\n";
}

void Document::Line(double x1, double y1, double x2, double y2,
                    std::string_view stroke, double width) {
  body_ += "<line x1=\"" + Fmt(x1) + "\" y1=\"" + Fmt(y1) + "\" x2=\"" + Fmt(x2) +
           "\" y2=\"" + Fmt(y2) + "\" stroke=\"" + std::string(stroke) +
           "\" stroke-width=\"" + Fmt(width) + "\"/>\n";
}

void Document::Circle(double cx, double cy, double r, std::string_view fill,
                      std::string_view stroke) {
  body_ += "<circle cx=\"" + Fmt(cx) + "\" cy=\"" + Fmt(cy) + "\" r=\"" + Fmt(r) +
           "\" fill=\"" + std::string(fill) + "\" stroke=\"" + std::string(stroke) +
           "\"/>\n";
}

void Document::Text(double x, double y, std::string_view text, double size,
                    std::string_view anchor, double rotate) {
  body_ += "<text x=\"" + Fmt(x) + "\" y=\"" + Fmt(y) + "\" font-size=\"" +
           Fmt(size) + "\" text-anchor=\"" + std::string(anchor) + "\"";
  if (rotate != 0) {
    body_ += " transform=\"rotate(" + Fmt(rotate) + " " + Fmt(x) + " " + Fmt(y) + ")\"";
  }
  body_ += ">" + Escape(text) + "</text>\n";
}

void Document::Polyline(const std::vector<std::pair<double, double>> &points,
                        std::string_view stroke, double width) {
  std::string pts;
  for (const auto &[x, y] : points) {
    if (!pts.empty()) pts += ' ';
    pts += Fmt(x) + "," + Fmt(y);
  }
  body_ += "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" +
           std::string(stroke) + "\" stroke-width=\"" + Fmt(width) + "\"/>\n";
}

void Document::Path(std::string_view d, std::string_view fill, std::string_view stroke) {
  body_ += "<path d=\"" + std::string(d) + "\" fill=\"" + std::string(fill) +
           "\" stroke=\"" + std::string(stroke) + "\"/>\n";
}

std::string Document::Render() const {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         Fmt(width_) + "\" height=\"" + Fmt(height_) + "\" viewBox=\"0 0 " +
         Fmt(width_) + " " + Fmt(height_) +
         "\" font-family=\"Helvetica, Arial, sans-serif\">\n"
         "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"white\"/>\n" +
         body_ + "</svg>\n";
}

Axes::Axes(double left, double top, double width, double height)
    : left_(left), top_(top), width_(width), height_(height) {}

void Axes::SetX(double lo, double hi, bool log) {
  if (log && (lo <= 0 || hi <= 0)) throw std::invalid_argument("log axis needs > 0");
  x_lo_ = lo;
  x_hi_ = hi > lo ? hi : lo + 1;
  x_log_ = log;
}

void Axes::SetY(double lo, double hi, bool log) {
  if (log && (lo <= 0 || hi <= 0)) throw std::invalid_argument("log axis needs > 0");
  y_lo_ = lo;
  y_hi_ = hi > lo ? hi : lo + 1;
  y_log_ = log;
}

double Axes::Map(double v, double lo, double hi, bool log) const {
  if (log) return (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
  return (v - lo) / (hi - lo);
}

double Axes::X(double v) const { return left_ + width_ * Map(v, x_lo_, x_hi_, x_log_); }
double Axes::Y(double v) const {
  return top_ + height_ * (1.0 - Map(v, y_lo_, y_hi_, y_log_));
}

void Axes::Draw(Document &doc, std::string_view x_label, std::string_view y_label,
                int x_ticks, int y_ticks) const {
  doc.Rect(left_, top_, width_, height_, "none", "#333333");
  auto ticks = [](double lo, double hi, bool log, int count) {
    std::vector<double> out;
    if (log) {
      for (double d = std::pow(10.0, std::floor(std::log10(lo))); d <= hi * 1.0001; d *= 10) {
        if (d >= lo * 0.9999) out.push_back(d);
      }
    } else {
      for (int i = 0; i <= count; ++i) out.push_back(lo + (hi - lo) * i / count);
    }
    return out;
  };
  for (double v : ticks(x_lo_, x_hi_, x_log_, x_ticks)) {
    double x = X(v);
    doc.Line(x, bottom(), x, bottom() + 5, "#333333");
    doc.Text(x, bottom() + 18, TickLabel(v), 11, "middle");
  }
  for (double v : ticks(y_lo_, y_hi_, y_log_, y_ticks)) {
    double y = Y(v);
    doc.Line(left_ - 5, y, left_, y, "#333333");
    doc.Text(left_ - 8, y + 4, TickLabel(v), 11, "end");
  }
  if (!x_label.empty()) doc.Text(left_ + width_ / 2, bottom() + 38, x_label, 13, "middle");
  if (!y_label.empty()) {
    doc.Text(left_ - 48, top_ + height_ / 2, y_label, 13, "middle", -90);
  }
}

}  // namespace expertaudit::svg
