#include "pcreg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <vector>

namespace pcreg {

namespace {

std::string fmt(double v) {
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.6g", v);
  return buffer;
}

std::string escape_xml(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  for (const char c : text) {
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

struct Bounds {
  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -std::numeric_limits<double>::infinity();
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();

  void include(Point2 p) {
    x_min = std::min(x_min, p.x);
    x_max = std::max(x_max, p.x);
    y_min = std::min(y_min, p.y);
    y_max = std::max(y_max, p.y);
  }

  void pad() {
    const double dx = x_max - x_min;
    const double dy = y_max - y_min;
    const double px = dx > 0.0 ? 0.05 * dx : 1.0;
    const double py = dy > 0.0 ? 0.05 * dy : 1.0;
    x_min -= px;
    x_max += px;
    y_min -= py;
    y_max += py;
  }
};

constexpr const char* kColorX = "#1f77b4";
constexpr const char* kColorY = "#ff7f0e";
constexpr const char* kColorMatched = "#2ca02c";

}  // namespace

SvgDocument::SvgDocument(double width_px, double height_px)
    : width_px_(width_px), height_px_(height_px) {}

void SvgDocument::set_view(double x_min, double x_max, double y_min, double y_max) {
  x_min_ = x_min;
  x_max_ = x_max;
  y_min_ = y_min;
  y_max_ = y_max;
}

double SvgDocument::to_px_x(double world_x) const {
  const double span = x_max_ - x_min_;
  const double t = span != 0.0 ? (world_x - x_min_) / span : 0.5;
  return margin_px_ + t * (width_px_ - 2.0 * margin_px_);
}

double SvgDocument::to_px_y(double world_y) const {
  const double span = y_max_ - y_min_;
  const double t = span != 0.0 ? (world_y - y_min_) / span : 0.5;
  return height_px_ - margin_px_ - t * (height_px_ - 2.0 * margin_px_);
}

void SvgDocument::add_circle(Point2 world, double radius_px, const std::string& fill,
                             const std::string& css_class) {
  body_ += "  <circle";
  if (!css_class.empty()) body_ += " class=\"" + escape_xml(css_class) + "\"";
  body_ += " cx=\"" + fmt(to_px_x(world.x)) + "\" cy=\"" + fmt(to_px_y(world.y)) +
           "\" r=\"" + fmt(radius_px) + "\" fill=\"" + escape_xml(fill) + "\"/>\n";
}

void SvgDocument::add_segment(Point2 a, Point2 b, const std::string& stroke, double width_px) {
  add_line_px(to_px_x(a.x), to_px_y(a.y), to_px_x(b.x), to_px_y(b.y), stroke, width_px);
}

void SvgDocument::add_polyline(std::span<const Point2> world, const std::string& stroke,
                               double width_px) {
  if (world.empty()) return;
  body_ += "  <polyline fill=\"none\" stroke=\"" + escape_xml(stroke) + "\" stroke-width=\"" +
           fmt(width_px) + "\" points=\"";
  for (std::size_t i = 0; i < world.size(); ++i) {
    if (i != 0) body_ += ' ';
    body_ += fmt(to_px_x(world[i].x)) + "," + fmt(to_px_y(world[i].y));
  }
  body_ += "\"/>\n";
}

void SvgDocument::add_text_px(double x_px, double y_px, const std::string& text, double size_px,
                              const std::string& fill) {
  body_ += "  <text x=\"" + fmt(x_px) + "\" y=\"" + fmt(y_px) + "\" font-size=\"" +
           fmt(size_px) + "\" font-family=\"sans-serif\" fill=\"" + escape_xml(fill) + "\">" +
           escape_xml(text) + "</text>\n";
}

void SvgDocument::add_line_px(double x1, double y1, double x2, double y2,
                              const std::string& stroke, double width_px) {
  body_ += "  <line x1=\"" + fmt(x1) + "\" y1=\"" + fmt(y1) + "\" x2=\"" + fmt(x2) +
           "\" y2=\"" + fmt(y2) + "\" stroke=\"" + escape_xml(stroke) + "\" stroke-width=\"" +
           fmt(width_px) + "\"/>\n";
}

void SvgDocument::add_rect_px(double x, double y, double w, double h, const std::string& fill) {
  body_ += "  <rect x=\"" + fmt(x) + "\" y=\"" + fmt(y) + "\" width=\"" + fmt(w) +
           "\" height=\"" + fmt(h) + "\" fill=\"" + escape_xml(fill) + "\"/>\n";
}

std::string SvgDocument::str() const {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width_px_) +
         "\" height=\"" + fmt(height_px_) + "\" viewBox=\"0 0 " + fmt(width_px_) + " " +
         fmt(height_px_) + "\">\n";
  out += "  <rect x=\"0\" y=\"0\" width=\"" + fmt(width_px_) + "\" height=\"" +
         fmt(height_px_) + "\" fill=\"#ffffff\"/>\n";
  out += body_;
  out += "</svg>\n";
  return out;
}

void SvgDocument::save(const std::string& path) const {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open for writing: " + path);
  }
  file << str();
}

void write_overlay_svg(const std::string& path, const PointCloud& x,
                       const PointCloud& y_transformed, std::span<const MatchPair> pairs) {
  SvgDocument doc(720, 560);
  Bounds bounds;
  for (const Point2& p : x.points) bounds.include(p);
  for (const Point2& p : y_transformed.points) bounds.include(p);
  bounds.pad();
  doc.set_view(bounds.x_min, bounds.x_max, bounds.y_min, bounds.y_max);

  std::vector<char> matched_x(x.size(), 0), matched_y(y_transformed.size(), 0);
  for (const MatchPair& pair : pairs) {
    if (pair.i < matched_x.size()) matched_x[pair.i] = 1;
    if (pair.j < matched_y.size()) matched_y[pair.j] = 1;
    doc.add_segment(x[pair.i], y_transformed[pair.j], kColorMatched, 0.8);
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    doc.add_circle(x[i], 3.0, matched_x[i] ? kColorMatched : kColorX,
                   matched_x[i] ? "matched-x" : "cloud-x");
  }
  for (std::size_t j = 0; j < y_transformed.size(); ++j) {
    doc.add_circle(y_transformed[j], 2.0, matched_y[j] ? kColorMatched : kColorY,
                   matched_y[j] ? "matched-y" : "cloud-y");
  }

  doc.add_rect_px(12, 10, 8, 8, kColorX);
  doc.add_text_px(26, 18, "X", 12);
  doc.add_rect_px(52, 10, 8, 8, kColorY);
  doc.add_text_px(66, 18, "Y (transformed)", 12);
  doc.add_rect_px(182, 10, 8, 8, kColorMatched);
  doc.add_text_px(196, 18, "matched", 12);
  doc.save(path);
}

void write_rate_svg(const std::string& path, std::span<const std::size_t> k_values,
                    std::span<const double> rates) {
  SvgDocument doc(640, 440);
  double k_max = 1.0;
  for (const std::size_t k : k_values) k_max = std::max(k_max, static_cast<double>(k));
  doc.set_view(0.0, k_max, 0.0, 1.0);

  doc.add_line_px(40, 400, 600, 400, "#333333", 1.0);
  doc.add_line_px(40, 40, 40, 400, "#333333", 1.0);
  doc.add_text_px(280, 430, "common points k", 13);
  doc.add_text_px(6, 30, "success rate", 13);
  for (int tick = 0; tick <= 4; ++tick) {
    const double rate = 0.25 * tick;
    doc.add_line_px(36, doc.to_px_y(rate), 40, doc.to_px_y(rate), "#333333", 1.0);
    doc.add_text_px(8, doc.to_px_y(rate) + 4, fmt(rate), 10);
  }

  std::vector<Point2> line;
  for (std::size_t i = 0; i < k_values.size() && i < rates.size(); ++i) {
    line.push_back({static_cast<double>(k_values[i]), rates[i]});
  }
  doc.add_polyline(line, kColorX, 1.5);
  for (const Point2& p : line) {
    doc.add_circle(p, 4.0, kColorX, "rate-point");
    doc.add_text_px(doc.to_px_x(p.x) - 8, 416, fmt(p.x), 10);
  }
  doc.save(path);
}

void write_histogram_svg(const std::string& path, std::span<const double> values,
                         std::size_t bins, const std::string& x_label) {
  SvgDocument doc(640, 440);
  if (bins == 0) bins = 1;
  double v_max = 0.0;
  for (const double v : values) v_max = std::max(v_max, v);
  if (v_max <= 0.0) v_max = 1.0;

  std::vector<std::size_t> counts(bins, 0);
  for (const double v : values) {
    std::size_t bin = static_cast<std::size_t>(std::floor(v / v_max * static_cast<double>(bins)));
    if (bin >= bins) bin = bins - 1;
    ++counts[bin];
  }
  std::size_t count_max = 1;
  for (const std::size_t c : counts) count_max = std::max(count_max, c);

  doc.set_view(0.0, v_max, 0.0, static_cast<double>(count_max));
  doc.add_line_px(40, 400, 600, 400, "#333333", 1.0);
  doc.add_line_px(40, 40, 40, 400, "#333333", 1.0);
  doc.add_text_px(260, 430, x_label, 13);

  const double bin_width = v_max / static_cast<double>(bins);
  for (std::size_t b = 0; b < bins; ++b) {
    if (counts[b] == 0) continue;
    const double x0 = doc.to_px_x(static_cast<double>(b) * bin_width);
    const double x1 = doc.to_px_x(static_cast<double>(b + 1) * bin_width);
    const double top = doc.to_px_y(static_cast<double>(counts[b]));
    doc.add_rect_px(x0, top, std::max(1.0, x1 - x0 - 1.0), doc.to_px_y(0.0) - top, kColorX);
  }
  // Rug strip: one marker per observation.
  for (const double v : values) {
    doc.add_circle({v, 0.0}, 2.0, kColorY, "observation");
  }
  doc.save(path);
}

}  // namespace pcreg
