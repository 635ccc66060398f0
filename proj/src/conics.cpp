#include "widths/conics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "widths/errors.hpp"

namespace widths {

namespace {

constexpr double kClassifyTol = 1e-12;

double chord_length_of_line(double alpha, double beta, double gamma, double R) {
  // line alpha x + beta y = gamma
  const double n = std::hypot(alpha, beta);
  if (n == 0.0) return 0.0;
  const double rho = std::abs(gamma) / n;
  if (rho >= R) return 0.0;
  return 2.0 * std::sqrt(R * R - rho * rho);
}

struct SimpsonState {
  double tol;
  int max_depth;
  const std::function<double(double)>* f;
  long evals = 0;
};

// Breadth guard: a discontinuous or noisy integrand would otherwise expand
// an exponentially wide refinement tree below the depth cap.
constexpr long kSimpsonEvalBudget = 400000;

double simpson_rule(double fa, double fm, double fb, double h) {
  return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(SimpsonState& st, double a, double b, double fa,
                     double fm, double fb, double whole, double tol,
                     int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = (*st.f)(lm), frm = (*st.f)(rm);
  st.evals += 2;
  const double left = simpson_rule(fa, flm, fm, m - a);
  const double right = simpson_rule(fm, frm, fb, b - m);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth >= st.max_depth) {
    throw QuadratureFailure("adaptive_simpson: depth cap reached");
  }
  if (st.evals > kSimpsonEvalBudget) {
    throw QuadratureFailure("adaptive_simpson: evaluation budget exhausted");
  }
  return adaptive_step(st, a, m, fa, flm, fm, left, tol / 2.0, depth + 1) +
         adaptive_step(st, m, b, fm, frm, fb, right, tol / 2.0, depth + 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double b, double abs_tol, int max_depth) {
  if (a == b) return 0.0;
  SimpsonState st{abs_tol, max_depth, &f};
  const double m = 0.5 * (a + b);
  const double fa = f(a), fm = f(m), fb = f(b);
  return adaptive_step(st, a, b, fa, fm, fb, simpson_rule(fa, fm, fb, b - a),
                       abs_tol, 0);
}

ConicCoeffs ConicCoeffs::normalized() const {
  const double scale = c.cwiseAbs().maxCoeff();
  if (scale == 0.0) throw InvalidParameter("conic: all coefficients zero");
  ConicCoeffs out;
  out.c = c / scale;
  return out;
}

const char* to_string(ConicClass k) {
  switch (k) {
    case ConicClass::Empty: return "empty";
    case ConicClass::Point: return "point";
    case ConicClass::Line: return "line";
    case ConicClass::ParallelLines: return "parallel-two-lines";
    case ConicClass::CrossingLines: return "crossing-two-lines";
    case ConicClass::DoubleLine: return "double-line";
    case ConicClass::Parabola: return "parabola";
    case ConicClass::Hyperbola: return "hyperbola";
  }
  return "?";
}

ConicClass classify(const ConicCoeffs& q_in) {
  const ConicCoeffs q = q_in.normalized();
  const double c0 = q.c0(), c1 = q.c1(), c2 = q.c2(), c3 = q.c3(),
               c4 = q.c4();
  if (std::abs(c4) > kClassifyTol) {
    // Indefinite quadratic part; degenerate iff the full 3x3 determinant
    // vanishes, in which case the conic factors into a vertical line (the
    // pole line) and one more line.
    const double det3 = c3 * (0.0 * c0 - c2 * c2 / 4.0) -
                        (c4 / 2.0) * (c4 * c0 / 2.0 - c2 * c1 / 4.0) +
                        (c1 / 2.0) * (c4 * c2 / 4.0 - 0.0);
    return std::abs(det3) < kClassifyTol ? ConicClass::CrossingLines
                                         : ConicClass::Hyperbola;
  }
  if (std::abs(c3) > kClassifyTol) {
    if (std::abs(c2) > kClassifyTol) return ConicClass::Parabola;
    const double disc = c1 * c1 - 4.0 * c3 * c0;
    if (disc > kClassifyTol) return ConicClass::ParallelLines;
    if (disc < -kClassifyTol) return ConicClass::Empty;
    return ConicClass::DoubleLine;
  }
  if (std::abs(c1) > kClassifyTol || std::abs(c2) > kClassifyTol) {
    return ConicClass::Line;
  }
  return ConicClass::Empty;
}

namespace {

/// Circle crossings of the conic, located on the circle's own parameter:
/// F(s) = Q(R cos s, R sin s). The crossings stay well separated in s even
/// when the conic degenerates toward a steep line pair and their
/// x-coordinates collide, which makes this bullet-proof where a polynomial
/// solve in x loses the roots to rounding.
std::vector<double> circle_crossings(const ConicCoeffs& q, double R) {
  const auto F = [&](double s) {
    return q(R * std::cos(s), R * std::sin(s));
  };
  constexpr int kScan = 4096;
  std::array<double, kScan + 1> val;
  double scale = 0.0;
  {
    // incremental rotation; drift over 4096 steps is far below what the
    // sign-change detection cares about, and bisection re-evaluates exactly
    const double step = 2.0 * M_PI / kScan;
    const double ch = std::cos(step), sh = std::sin(step);
    double c = R, s = 0.0;
    for (int i = 0; i <= kScan; ++i) {
      val[i] = q(c, s);
      scale = std::max(scale, std::abs(val[i]));
      const double cn = c * ch - s * sh;
      s = c * sh + s * ch;
      c = cn;
    }
  }
  if (scale == 0.0) return {};

  std::vector<double> roots;
  const auto bisect = [&](double lo, double hi, double flo) {
    for (int it = 0; it < 80 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      if ((F(mid) < 0.0) == (flo < 0.0)) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  };
  for (int i = 0; i < kScan; ++i) {
    const double a = 2.0 * M_PI * i / kScan, b = 2.0 * M_PI * (i + 1) / kScan;
    if (val[i] == 0.0) {
      roots.push_back(a);
      continue;
    }
    if ((val[i] < 0.0) != (val[i + 1] < 0.0)) {
      bisect(a, b, val[i]);
    } else if (i > 0 && std::abs(val[i]) < 0.02 * scale &&
               std::abs(val[i]) < std::abs(val[i - 1]) &&
               std::abs(val[i]) <= std::abs(val[i + 1])) {
      // near-tangency: a sign-definite cell may hide a root pair around a
      // local extremum; refine the extremum and split if it crosses zero
      double lo = 2.0 * M_PI * (i - 1) / kScan, hi = b;
      for (int it = 0; it < 60; ++it) {
        const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
        if (std::abs(F(m1)) > std::abs(F(m2))) {
          lo = m1;
        } else {
          hi = m2;
        }
      }
      const double sm = 0.5 * (lo + hi);
      const double fm = F(sm);
      if ((fm < 0.0) != (val[i] < 0.0) && fm != 0.0) {
        bisect(2.0 * M_PI * (i - 1) / kScan, sm, val[i - 1]);
        bisect(sm, b, fm);
      }
    }
  }
  return roots;
}

/// Graph-over-x integration shared by the parabola and hyperbola cases:
/// y(x) = -(c3 x^2 + c1 x + c0) / (c4 x + c2).
double graph_arc_length(const ConicCoeffs& q, double R,
                        const QuadratureConfig& quad) {
  const double c0 = q.c0(), c1 = q.c1(), c2 = q.c2(), c3 = q.c3(),
               c4 = q.c4();
  std::vector<double> cuts = {-R, R};
  for (double s : circle_crossings(q, R)) {
    const double x = R * std::cos(s);
    if (x > -R && x < R) cuts.push_back(x);
  }
  // Crossings of the levels y = +-R: quadratics in x. Steep arcs meet the
  // circle close to these levels, so the roots pin down the partition where
  // the crossings nearly collide in x and the angular scan alone could lump
  // an outside cap into an inside interval.
  for (double sgn : {1.0, -1.0}) {
    const double A = c3, B = c1 + sgn * R * c4, C = c0 + sgn * R * c2;
    if (std::abs(A) > 1e-300) {
      const double disc = B * B - 4.0 * A * C;
      if (disc >= 0.0) {
        const double r = std::sqrt(disc);
        for (double x : {(-B - r) / (2.0 * A), (-B + r) / (2.0 * A)}) {
          if (x > -R && x < R) cuts.push_back(x);
        }
      }
    } else if (std::abs(B) > 1e-300) {
      const double x = -C / B;
      if (x > -R && x < R) cuts.push_back(x);
    }
  }
  if (std::abs(c4) > 0.0) {
    const double pole = -c2 / c4;
    if (pole > -R && pole < R) cuts.push_back(pole);
  }
  std::sort(cuts.begin(), cuts.end());

  const auto den = [&](double x) { return c4 * x + c2; };
  const auto num = [&](double x) { return (c3 * x + c1) * x + c0; };
  const auto yfun = [&](double x) { return -num(x) / den(x); };
  const auto slope = [&](double x) {
    const double d = den(x);
    return -((2.0 * c3 * x + c1) * d - c4 * num(x)) / (d * d);
  };
  const std::function<double(double)> integrand_x = [&](double x) {
    const double dy = slope(x);
    return std::sqrt(1.0 + dy * dy);
  };

  // x(y) on a single monotone piece with endpoints (xlo, ya) and (xhi, yb):
  // the conic is quadratic in x at fixed y; where a near-degenerate mate
  // branch intrudes into the piece's x-range, continuity along the piece
  // (tracked by linear prediction) picks the right root.
  const auto x_of_y = [&](double y, double xlo, double xhi, double ya,
                          double yb) {
    const double A = c3, B = c1 + c4 * y, C = c0 + c2 * y;
    const double f = (y - ya) / (yb - ya);
    const double xpred = xlo + f * (xhi - xlo);
    if (std::abs(A) < 1e-300) return -C / B;
    const double disc = std::max(0.0, B * B - 4.0 * A * C);
    const double qf = -0.5 * (B + std::copysign(std::sqrt(disc), B));
    const double r1 = qf / A;
    const double r2 = qf == 0.0 ? r1 : C / qf;
    if (!std::isfinite(r1)) return r2;
    if (!std::isfinite(r2)) return r1;
    return std::abs(r1 - xpred) <= std::abs(r2 - xpred) ? r1 : r2;
  };

  // A steep piece (|y'| >= 1 throughout) is integrated over y, where the
  // integrand is bounded by sqrt(2); integrating it over x would chase the
  // near-vertical profile with ever finer steps.
  const auto piece_length = [&](double xlo, double xhi) {
    const double mid_slope = std::abs(slope(0.5 * (xlo + xhi)));
    if (mid_slope <= 1.0) {
      return adaptive_simpson(integrand_x, xlo, xhi, quad.abs_tol,
                              quad.max_depth);
    }
    const double ya = yfun(xlo), yb = yfun(xhi);
    if (std::abs(yb - ya) < 1e-15) {
      return std::hypot(xhi - xlo, yb - ya);
    }
    const std::function<double(double)> integrand_y = [&](double y) {
      const double x = x_of_y(y, xlo, xhi, ya, yb);
      const double qx = 2.0 * c3 * x + c1 + c4 * y;
      const double qy = c4 * x + c2;
      const double dxdy = qx == 0.0 ? 0.0 : -qy / qx;
      return std::sqrt(1.0 + dxdy * dxdy);
    };
    return adaptive_simpson(integrand_y, std::min(ya, yb), std::max(ya, yb),
                            quad.abs_tol, quad.max_depth);
  };

  // Slope-regime boundaries: |y'(x)| = 1 reduces to two quadratics. Adding
  // their roots to the partition makes every piece either shallow or steep.
  std::vector<double> splits = cuts;
  for (double sgn : {1.0, -1.0}) {
    // (num' den - c4 num) + sgn den^2 = 0
    const double A = c3 * c4 + sgn * c4 * c4;
    const double B = 2.0 * c3 * c2 + sgn * 2.0 * c4 * c2;
    const double C = c1 * c2 - c4 * c0 + sgn * c2 * c2;
    if (std::abs(A) > 1e-300) {
      const double disc = B * B - 4.0 * A * C;
      if (disc >= 0.0) {
        const double r = std::sqrt(disc);
        for (double x : {(-B - r) / (2.0 * A), (-B + r) / (2.0 * A)}) {
          if (x > -R && x < R) splits.push_back(x);
        }
      }
    } else if (std::abs(B) > 1e-300) {
      const double x = -C / B;
      if (x > -R && x < R) splits.push_back(x);
    }
  }
  std::sort(splits.begin(), splits.end());

  double total = 0.0;
  std::size_t piece = 0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double lo = cuts[k], hi = cuts[k + 1];
    if (hi - lo < 1e-13) continue;
    // Majority vote over three interior samples; a single midpoint can land
    // exactly on the circle when the arc is tangent to it.
    int inside = 0, valid = 0;
    for (double f : {0.25, 0.5, 0.75}) {
      const double x = lo + f * (hi - lo);
      if (std::abs(den(x)) < 1e-13) continue;
      ++valid;
      const double y = yfun(x);
      if (x * x + y * y < R * R) ++inside;
    }
    if (valid == 0 || 2 * inside <= valid) continue;
    while (piece < splits.size() && splits[piece] <= lo) ++piece;
    double at = lo;
    for (std::size_t s = piece; s < splits.size() && splits[s] < hi; ++s) {
      if (splits[s] - at > 1e-13) total += piece_length(at, splits[s]);
      at = splits[s];
    }
    if (hi - at > 1e-13) total += piece_length(at, hi);
  }
  return total;
}

}  // namespace

double disk_length(const ConicCoeffs& q_in, const Domain& dom,
                   const QuadratureConfig& quad) {
  if (!dom.is_disk()) {
    throw InvalidParameter("disk_length: domain must be a disk");
  }
  const double R = dom.radius();
  const ConicCoeffs q = q_in.normalized();
  const double c0 = q.c0(), c1 = q.c1(), c2 = q.c2(), c3 = q.c3(),
               c4 = q.c4();
  switch (classify(q)) {
    case ConicClass::Empty:
    case ConicClass::Point:
      return 0.0;
    case ConicClass::Line:
      return chord_length_of_line(c1, c2, -c0, R);
    case ConicClass::ParallelLines:
    case ConicClass::DoubleLine: {
      // vertical lines at the roots of c3 x^2 + c1 x + c0
      const double disc = std::max(0.0, c1 * c1 - 4.0 * c3 * c0);
      const double r = std::sqrt(disc);
      const double x1 = (-c1 - r) / (2.0 * c3);
      const double x2 = (-c1 + r) / (2.0 * c3);
      double len = chord_length_of_line(1.0, 0.0, x1, R);
      if (std::abs(x2 - x1) > 1e-12) {
        len += chord_length_of_line(1.0, 0.0, x2, R);
      }
      return len;
    }
    case ConicClass::CrossingLines: {
      // One factor is the pole line x = -c2/c4; the other comes from exact
      // polynomial division of the numerator by (c4 x + c2).
      const double xv = -c2 / c4;
      const double p = c3 / c4;
      const double r = (c1 - p * c2) / c4;  // y = -(p x + r)
      return chord_length_of_line(1.0, 0.0, xv, R) +
             chord_length_of_line(p, 1.0, -r, R);
    }
    case ConicClass::Parabola:
    case ConicClass::Hyperbola:
      return graph_arc_length(q, R, quad);
  }
  return 0.0;
}

LineHitsResult line_hits(const ConicCoeffs& q_in, const LineParam& line) {
  if (line.rho < 0.0) throw InvalidParameter("line_hits: rho must be >= 0");
  const ConicCoeffs q = q_in.normalized();
  const Vec2 p = line.rho * line.normal();
  const Vec2 d = line.tangent();
  // Q(p + s d) = A s^2 + B s + C
  const double A = q.c3() * d.x() * d.x() + q.c4() * d.x() * d.y();
  const double B = 2.0 * q.c3() * p.x() * d.x() +
                   q.c4() * (p.x() * d.y() + p.y() * d.x()) + q.c1() * d.x() +
                   q.c2() * d.y();
  const double C = q(p);

  LineHitsResult out;
  const double scale = std::max({std::abs(A), std::abs(B), std::abs(C)});
  if (scale < 1e-13) {
    out.coincident = true;
    return out;
  }
  if (std::abs(A) < 1e-13 * scale) {
    if (std::abs(B) < 1e-13 * scale) return out;  // constant != 0: no hits
    out.points.push_back(p + (-C / B) * d);
    return out;
  }
  const double disc = B * B - 4.0 * A * C;
  const double disc_tol = 1e-12 * scale * scale;
  if (disc > disc_tol) {
    const double r = std::sqrt(disc);
    out.points.push_back(p + ((-B - r) / (2.0 * A)) * d);
    out.points.push_back(p + ((-B + r) / (2.0 * A)) * d);
  } else if (disc >= -disc_tol) {
    out.tangent_points.push_back(p + (-B / (2.0 * A)) * d);
  }
  return out;
}

double parabola_crossing_x(double a) {
  if (!(a >= 1.0)) throw InvalidParameter("parabola_crossing_x: need a >= 1");
  return std::sqrt(2.0 * a - 1.0) / a;
}

double parabola_L(double a) {
  if (!(a >= 1.0)) throw InvalidParameter("parabola_L: need a >= 1");
  const double s1 = std::sqrt(8.0 * a - 3.0);
  const double s2 = std::sqrt(2.0 * a - 1.0);
  return (std::log(s1 + 2.0 * s2) + 2.0 * s2 * s1) / (2.0 * a);
}

double sign_expr(double z) {
  if (!(z > 0.0)) throw InvalidParameter("sign_expr: need z > 0");
  const double s = std::sqrt(4.0 * z + 1.0);
  return 2.0 * s / std::sqrt(z) - std::log(s + 2.0 * std::sqrt(z));
}

ParabolaMax maximize_parabola() {
  double lo = 99.0, hi = 299.0;
  double flo = sign_expr(lo), fhi = sign_expr(hi);
  if (!(flo > 0.0 && fhi < 0.0)) {
    throw BracketInvalid("maximize_parabola: endpoint signs do not straddle 0");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-13 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (sign_expr(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  ParabolaMax out;
  const double z0 = 0.5 * (lo + hi);
  out.a0 = (z0 + 1.0) / 2.0;
  out.L0 = parabola_L(out.a0);
  if (!(out.L0 > 4.0)) {
    throw BracketInvalid("maximize_parabola: maximum did not exceed 4");
  }
  return out;
}

double hyperbola_branch_length(const HyperbolaBranchParam& param,
                               const QuadratureConfig& quad) {
  if (!param.admissible()) {
    throw InvalidParameter("hyperbola_branch_length: inadmissible (c, d)");
  }
  const auto g = [&](double x) {
    const double y = param.value(x);
    return x * x + y * y - 1.0;
  };
  if (g(1.0) <= 0.0) {
    // Branch stays inside up to x = 1; cannot happen with H(1) > 0.
    throw InvalidParameter("hyperbola_branch_length: branch does not exit");
  }
  // The vertex sits on the circle at (0, -1) and the branch curves inside
  // (c > d for admissible parameters), so g < 0 just right of 0. Seed the
  // bracket away from the rounding plateau at the vertex.
  double lo = -1.0;
  for (double cand : {0.5, 0.25, 0.1, 0.05, 0.02, 0.01, 0.005, 0.002, 0.001}) {
    if (g(cand) < 0.0) {
      lo = cand;
      break;
    }
  }
  if (lo < 0.0) return 0.0;
  double hi = 1.0;
  for (int it = 0; it < 120; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) < 0.0 ? lo : hi) = mid;
  }
  const double xc = 0.5 * (lo + hi);
  const std::function<double(double)> integrand = [&](double x) {
    const double dy = param.slope(x);
    return std::sqrt(1.0 + dy * dy);
  };
  return 2.0 * adaptive_simpson(integrand, 0.0, xc, quad.abs_tol,
                                quad.max_depth);
}

namespace {

double c_min_for(double d) { return d / (std::sqrt(d * d + 1.0) - d); }

double branch_length_or_zero(double c, double d) {
  HyperbolaBranchParam p{c, d};
  if (!p.admissible()) return 0.0;
  return hyperbola_branch_length(p);
}

}  // namespace

HyperbolaMax hyperbola_branch_max(const HyperbolaSearchConfig& cfg) {
  HyperbolaMax best;
  // Coarse admissible-region scan.
  for (int i = 0; i < cfg.d_grid; ++i) {
    const double d = cfg.d_min * std::pow(cfg.d_max / cfg.d_min,
                                          i / double(cfg.d_grid - 1));
    const double cmin = c_min_for(d);
    for (int j = 0; j < cfg.c_grid; ++j) {
      const double f =
          std::pow(cfg.c_factor_max, (j + 1) / double(cfg.c_grid));
      const double c = cmin * (1.0 + f);
      const double len = branch_length_or_zero(c, d);
      if (len > best.sup) {
        best.sup = len;
        best.argmax = {c, d};
      }
    }
  }
  // Local refinement: golden-section ascent in (log c, log d), one coordinate
  // at a time.
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double lc = std::log(best.argmax.c), ld = std::log(best.argmax.d);
  double span = 0.7;
  const auto value = [&](double vlc, double vld) {
    const double d = std::exp(vld);
    if (d > cfg.d_max) return 0.0;
    return branch_length_or_zero(std::exp(vlc), d);
  };
  for (int sweep = 0; sweep < 8; ++sweep) {
    for (int coord = 0; coord < 2; ++coord) {
      double a = -span, b = span;
      const auto val = [&](double s) {
        return coord == 0 ? value(lc + s, ld) : value(lc, ld + s);
      };
      double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
      double f1 = val(x1), f2 = val(x2);
      for (int it = 0; it < cfg.refine_iters; ++it) {
        if (f1 < f2) {
          a = x1;
          x1 = x2;
          f1 = f2;
          x2 = a + gr * (b - a);
          f2 = val(x2);
        } else {
          b = x2;
          x2 = x1;
          f2 = f1;
          x1 = b - gr * (b - a);
          f1 = val(x1);
        }
      }
      const double s = 0.5 * (a + b);
      const double fv = val(s);
      if (fv > best.sup) {
        (coord == 0 ? lc : ld) += s;
        best.sup = fv;
        best.argmax = {std::exp(lc), std::exp(ld)};
      }
    }
    span *= 0.5;
  }
  return best;
}

}  // namespace widths
