#ifndef WIDTHS_SVG_HPP
#define WIDTHS_SVG_HPP

#include <string>
#include <vector>

#include "widths/billiards.hpp"
#include "widths/conics.hpp"
#include "widths/geometry.hpp"
#include "widths/network.hpp"

namespace widths {

/// Minimal SVG 1.1 writer for static plots. The viewport maps the square
/// [-margin, margin]^2 in plane units onto a fixed pixel canvas; y points up.
class SvgWriter {
 public:
  explicit SvgWriter(double margin = 1.15, int pixels = 640);

  void add_circle(const Vec2& center, double radius,
                  const std::string& stroke = "black");
  void add_ellipse(const Vec2& center, double rx, double ry,
                   const std::string& stroke = "black");
  void add_polyline(const std::vector<Vec2>& points,
                    const std::string& stroke = "steelblue");
  void add_line(const Vec2& a, const Vec2& b,
                const std::string& stroke = "steelblue");

  std::string str() const;

 private:
  double sx(double x) const;
  double sy(double y) const;
  double scale_;
  int pixels_;
  std::vector<std::string> elements_;
};

/// Exactly one boundary circle and one polyline: the parabola y = a x^2 - 1
/// clipped to the unit disk.
std::string parabola_svg(double a, int samples = 256);

std::string orbit_svg(const BilliardOrbit& orbit, const Domain& dom);
std::string network_svg(const GeodesicNetwork& net, const Domain& dom);
std::string conic_svg(const ConicCoeffs& q, int samples = 512);

}  // namespace widths

#endif
