#include "widths/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace widths {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

SvgWriter::SvgWriter(double margin, int pixels)
    : scale_(pixels / (2.0 * margin)), pixels_(pixels) {}

double SvgWriter::sx(double x) const { return pixels_ / 2.0 + scale_ * x; }
double SvgWriter::sy(double y) const { return pixels_ / 2.0 - scale_ * y; }

void SvgWriter::add_circle(const Vec2& center, double radius,
                           const std::string& stroke) {
  std::ostringstream e;
  e << "<circle cx=\"" << fmt(sx(center.x())) << "\" cy=\""
    << fmt(sy(center.y())) << "\" r=\"" << fmt(radius * scale_)
    << "\" fill=\"none\" stroke=\"" << stroke << "\"/>";
  elements_.push_back(e.str());
}

void SvgWriter::add_ellipse(const Vec2& center, double rx, double ry,
                            const std::string& stroke) {
  std::ostringstream e;
  e << "<ellipse cx=\"" << fmt(sx(center.x())) << "\" cy=\""
    << fmt(sy(center.y())) << "\" rx=\"" << fmt(rx * scale_) << "\" ry=\""
    << fmt(ry * scale_) << "\" fill=\"none\" stroke=\"" << stroke << "\"/>";
  elements_.push_back(e.str());
}

void SvgWriter::add_polyline(const std::vector<Vec2>& points,
                             const std::string& stroke) {
  std::ostringstream e;
  e << "<polyline points=\"";
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (k) e << " ";
    e << fmt(sx(points[k].x())) << "," << fmt(sy(points[k].y()));
  }
  e << "\" fill=\"none\" stroke=\"" << stroke << "\"/>";
  elements_.push_back(e.str());
}

void SvgWriter::add_line(const Vec2& a, const Vec2& b,
                         const std::string& stroke) {
  std::ostringstream e;
  e << "<line x1=\"" << fmt(sx(a.x())) << "\" y1=\"" << fmt(sy(a.y()))
    << "\" x2=\"" << fmt(sx(b.x())) << "\" y2=\"" << fmt(sy(b.y()))
    << "\" stroke=\"" << stroke << "\"/>";
  elements_.push_back(e.str());
}

std::string SvgWriter::str() const {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << pixels_
      << "\" height=\"" << pixels_ << "\" viewBox=\"0 0 " << pixels_ << " "
      << pixels_ << "\">\n";
  for (const auto& e : elements_) out << "  " << e << "\n";
  out << "</svg>\n";
  return out.str();
}

std::string parabola_svg(double a, int samples) {
  SvgWriter svg;
  svg.add_circle(Vec2::Zero(), 1.0);
  const double xc = parabola_crossing_x(a);
  std::vector<Vec2> pts;
  for (int k = 0; k <= samples; ++k) {
    const double x = -xc + 2.0 * xc * k / samples;
    pts.emplace_back(x, a * x * x - 1.0);
  }
  svg.add_polyline(pts);
  return svg.str();
}

std::string orbit_svg(const BilliardOrbit& orbit, const Domain& dom) {
  SvgWriter svg(std::max(dom.a(), dom.b()) * 1.15);
  svg.add_ellipse(Vec2::Zero(), dom.a(), dom.b());
  std::vector<Vec2> pts;
  for (const auto& c : orbit.chords) pts.push_back(c.from.p);
  if (!orbit.chords.empty()) pts.push_back(orbit.chords.back().to.p);
  svg.add_polyline(pts);
  return svg.str();
}

std::string network_svg(const GeodesicNetwork& net, const Domain& dom) {
  SvgWriter svg(std::max(dom.a(), dom.b()) * 1.15);
  svg.add_ellipse(Vec2::Zero(), dom.a(), dom.b());
  for (const auto& s : net.segments) {
    svg.add_line(net.junctions[s.i].position, net.junctions[s.j].position);
  }
  return svg.str();
}

std::string conic_svg(const ConicCoeffs& q_in, int samples) {
  SvgWriter svg;
  svg.add_circle(Vec2::Zero(), 1.0);
  const ConicCoeffs q = q_in.normalized();
  // Sample the graph y(x) = -(c3 x^2 + c1 x + c0)/(c4 x + c2) where defined;
  // purely vertical components are drawn from the factored lines.
  const double c0 = q.c0(), c1 = q.c1(), c2 = q.c2(), c3 = q.c3(),
               c4 = q.c4();
  if (std::abs(c2) < 1e-13 && std::abs(c4) < 1e-13) {
    if (std::abs(c3) > 1e-13) {
      const double disc = c1 * c1 - 4.0 * c3 * c0;
      if (disc >= 0.0) {
        for (double x : {(-c1 - std::sqrt(disc)) / (2.0 * c3),
                         (-c1 + std::sqrt(disc)) / (2.0 * c3)}) {
          if (std::abs(x) < 1.0) {
            const double h = std::sqrt(1.0 - x * x);
            svg.add_line(Vec2(x, -h), Vec2(x, h));
          }
        }
      }
    } else if (std::abs(c1) > 1e-13) {
      const double x = -c0 / c1;
      if (std::abs(x) < 1.0) {
        const double h = std::sqrt(1.0 - x * x);
        svg.add_line(Vec2(x, -h), Vec2(x, h));
      }
    }
    return svg.str();
  }
  std::vector<Vec2> run;
  for (int k = 0; k <= samples; ++k) {
    const double x = -1.0 + 2.0 * k / samples;
    const double den = c4 * x + c2;
    bool ok = std::abs(den) > 1e-9;
    Vec2 p;
    if (ok) {
      const double y = -((c3 * x + c1) * x + c0) / den;
      p = Vec2(x, y);
      ok = p.squaredNorm() <= 1.0;
    }
    if (ok) {
      run.push_back(p);
    } else if (run.size() >= 2) {
      svg.add_polyline(run);
      run.clear();
    } else {
      run.clear();
    }
  }
  if (run.size() >= 2) svg.add_polyline(run);
  return svg.str();
}

}  // namespace widths
