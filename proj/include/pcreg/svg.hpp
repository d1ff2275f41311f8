#pragma once

#include <span>
#include <string>
#include <vector>

#include "pcreg/geometry.hpp"

namespace pcreg {

/// Minimal SVG scene builder: fixed pixel canvas, linear world-to-pixel
/// mapping with the y axis pointing up, elements appended in draw order.
class SvgDocument {
 public:
  SvgDocument(double width_px, double height_px);

  /// World-coordinate window mapped onto the canvas (minus a fixed margin).
  void set_view(double x_min, double x_max, double y_min, double y_max);

  void add_circle(Point2 world, double radius_px, const std::string& fill,
                  const std::string& css_class = "");
  void add_segment(Point2 a, Point2 b, const std::string& stroke, double width_px);
  void add_polyline(std::span<const Point2> world, const std::string& stroke, double width_px);

  /// Pixel-space primitives for axes, legends and labels.
  void add_text_px(double x_px, double y_px, const std::string& text, double size_px,
                   const std::string& fill = "#333333");
  void add_line_px(double x1, double y1, double x2, double y2, const std::string& stroke,
                   double width_px);
  void add_rect_px(double x, double y, double w, double h, const std::string& fill);

  double to_px_x(double world_x) const;
  double to_px_y(double world_y) const;
  double width() const { return width_px_; }
  double height() const { return height_px_; }

  std::string str() const;
  void save(const std::string& path) const;

 private:
  double width_px_;
  double height_px_;
  double margin_px_ = 40.0;
  double x_min_ = 0.0, x_max_ = 1.0, y_min_ = 0.0, y_max_ = 1.0;
  std::string body_;
};

/// Registration overlay: cloud X, the transformed cloud Y, matched points of
/// both highlighted, plus a legend. Exactly one marker per point.
void write_overlay_svg(const std::string& path, const PointCloud& x,
                       const PointCloud& y_transformed, std::span<const MatchPair> pairs);

/// Success-rate line chart with one marker per (k, rate) sample.
void write_rate_svg(const std::string& path, std::span<const std::size_t> k_values,
                    std::span<const double> rates);

/// Histogram with a rug strip: one bar per bin and one marker per observation.
void write_histogram_svg(const std::string& path, std::span<const double> values,
                         std::size_t bins, const std::string& x_label);

}  // namespace pcreg
