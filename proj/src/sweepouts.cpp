#include "widths/sweepouts.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <iomanip>
#include <sstream>
#include <cmath>
#include <vector>

#include "widths/errors.hpp"
#include "widths/sampling.hpp"

namespace widths {

ProjectiveClass ProjectiveClass::make(int p,
                                      const Eigen::Matrix<double, 5, 1>& raw) {
  if (p < 1 || p > 4) throw InvalidParameter("ProjectiveClass: p in 1..4");
  ProjectiveClass cls;
  cls.p = p;
  cls.coeffs = raw;
  for (int k = p + 1; k < 5; ++k) {
    if (std::abs(cls.coeffs[k]) > 1e-14) {
      throw InvalidParameter("ProjectiveClass: nonzero entry beyond index p");
    }
    cls.coeffs[k] = 0.0;
  }
  const double n = cls.coeffs.norm();
  if (n == 0.0) throw InvalidParameter("ProjectiveClass: zero vector");
  cls.coeffs /= n;
  for (int k = 0; k < 5; ++k) {
    if (std::abs(cls.coeffs[k]) > 1e-14) {
      if (cls.coeffs[k] < 0.0) cls.coeffs = -cls.coeffs;
      break;
    }
  }
  return cls;
}

EvaluatedClass evaluate(const ProjectiveClass& cls,
                        const QuadratureConfig& quad) {
  EvaluatedClass out;
  out.conic = cls.conic();
  out.length = disk_length(out.conic, Domain::disk(1.0), quad);
  return out;
}

namespace {

constexpr double kGolden = 0.6180339887498949;

struct Objective {
  int p;
  QuadratureConfig quad;
  mutable int evals = 0;

  double operator()(const Eigen::VectorXd& w) const {
    ++evals;
    ConicCoeffs q;
    for (int k = 0; k <= p; ++k) q.c[k] = w[k];
    if (q.c.cwiseAbs().maxCoeff() == 0.0) return 0.0;
    try {
      return disk_length(q, Domain::disk(1.0), quad);
    } catch (const QuadratureFailure&) {
      // A class whose variety resists the arc quadrature (degenerate up to
      // rounding) cannot be the supremum; skip it rather than abort the
      // whole search.
      if (std::getenv("WIDTHS_TRACE")) {
        std::cerr << "quadrature skip at q=[" << q.c.transpose() << "]\n";
      }
      return 0.0;
    }
  }
};

/// Golden-section maximization over [lo, hi] after a coarse scan brackets the
/// best bump; the objective is only piecewise-unimodal along a line.
double line_max(const std::function<double(double)>& f, double lo, double hi,
                int scan_points, int iters, double* best_val) {
  double best_s = lo, best_f = -1.0;
  const int n = std::max(scan_points, 5);
  for (int i = 0; i < n; ++i) {
    const double s = lo + (hi - lo) * i / (n - 1);
    const double v = f(s);
    if (v > best_f) {
      best_f = v;
      best_s = s;
    }
  }
  const double h = (hi - lo) / (n - 1);
  double a = std::max(lo, best_s - h), b = std::min(hi, best_s + h);
  double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < iters; ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = f(x1);
    }
  }
  const double s = 0.5 * (a + b);
  const double v = f(s);
  if (v >= best_f) {
    *best_val = v;
    return s;
  }
  *best_val = best_f;
  return best_s;
}

/// Stage 1: coordinate-wise golden-section ascent on the sphere chart.
void sphere_ascent(const Objective& obj, Eigen::VectorXd& w, double& fbest,
                   double span, int sweeps) {
  const int n = static_cast<int>(w.size());
  for (int sweep = 0; sweep < sweeps; ++sweep) {
    for (int i = 0; i < n; ++i) {
      Eigen::VectorXd t = Eigen::VectorXd::Zero(n);
      t[i] = 1.0;
      t -= t.dot(w) * w;
      const double tn = t.norm();
      if (tn < 1e-12) continue;
      t /= tn;
      const auto value = [&](double alpha) {
        const Eigen::VectorXd ww = std::cos(alpha) * w + std::sin(alpha) * t;
        return obj(ww);
      };
      double fv = 0.0;
      const double alpha = line_max(value, -span, span, 13, 30, &fv);
      if (fv > fbest) {
        w = std::cos(alpha) * w + std::sin(alpha) * t;
        w.normalize();
        fbest = fv;
      }
    }
    span *= 0.55;
  }
}

/// Stage 2: the same ascent in a vertex-form chart of the c2 != 0, c3 != 0
/// stratum. Writing the class as alpha (x-h)^2 + k - y + c4 xy separates the
/// circle-tangency constraint (which pins k) from the translation h and the
/// steepness alpha, where the sphere chart forces coupled micro-steps.
struct VertexChart {
  double alpha = 1.0;
  double h = 0.0;
  double k = -1.0;
  double c4 = 0.0;

  Eigen::VectorXd to_coeffs(int p) const {
    Eigen::VectorXd w(p + 1);
    w.setZero();
    w[0] = alpha * h * h + k;
    w[1] = -2.0 * alpha * h;
    w[2] = -1.0;
    w[3] = alpha;
    if (p >= 4) w[4] = c4;
    return w.normalized();
  }

  static bool from_coeffs(const Eigen::VectorXd& w, VertexChart* out) {
    const double c2 = w[2];
    const double c3 = w.size() > 3 ? w[3] : 0.0;
    if (std::abs(c2) < 1e-7 || std::abs(c3) < 1e-7) return false;
    const double alpha = -c3 / c2;
    const double beta = -w[1] / c2;
    const double gamma = -w[0] / c2;
    out->alpha = alpha;
    out->h = -beta / (2.0 * alpha);
    out->k = gamma + beta * out->h + alpha * out->h * out->h;
    out->c4 = w.size() > 4 ? -w[4] / c2 : 0.0;
    return true;
  }
};

void vertex_chart_ascent(const Objective& obj, Eigen::VectorXd& w,
                         double& fbest) {
  VertexChart chart;
  if (!VertexChart::from_coeffs(w, &chart)) return;
  const int p = obj.p;
  const auto value_of = [&](const VertexChart& q) {
    return obj(q.to_coeffs(p));
  };
  double spans[4] = {std::max(60.0, 0.8 * std::abs(chart.alpha)), 0.08, 0.02,
                     p >= 4 ? 0.08 : 0.0};
  double f = value_of(chart);
  if (f < fbest - 1e-12) {
    // conversion degraded the value (near-degenerate chart); keep stage 1
    return;
  }
  f = std::max(f, fbest);
  for (int sweep = 0; sweep < 12; ++sweep) {
    for (int coord = 0; coord < 4; ++coord) {
      if (spans[coord] <= 0.0) continue;
      const auto value = [&](double step) {
        VertexChart q = chart;
        (coord == 0   ? q.alpha
         : coord == 1 ? q.h
         : coord == 2 ? q.k
                      : q.c4) += step;
        if (q.alpha == 0.0) return 0.0;
        return value_of(q);
      };
      double fv = 0.0;
      const double step = line_max(value, -spans[coord], spans[coord], 13, 35, &fv);
      if (fv > f) {
        (coord == 0   ? chart.alpha
         : coord == 1 ? chart.h
         : coord == 2 ? chart.k
                      : chart.c4) += step;
        f = fv;
      }
    }
    for (double& s : spans) s *= 0.5;
  }
  if (f > fbest) {
    fbest = f;
    Eigen::VectorXd ww = chart.to_coeffs(p);
    w = ww;
  }
}

}  // namespace

SupResult sup_length(int p, const SamplingConfig& cfg) {
  if (p < 1 || p > 4) throw InvalidParameter("sup_length: p in 1..4");
  if (cfg.budget < 1000) {
    throw InvalidParameter("sup_length: sampling budget must be >= 1000");
  }
  const int dim = p + 1;
  Objective obj{p, cfg.quad};

  struct Sample {
    double value;
    std::uint64_t index;
    Eigen::VectorXd w;
  };
  std::vector<Sample> top;
  for (std::uint64_t i = 1; i <= static_cast<std::uint64_t>(cfg.budget); ++i) {
    Eigen::VectorXd w = sphere_point(dim, i, cfg.seed);
    const double v = obj(w);
    top.push_back({v, i, std::move(w)});
    // keep the list short; ties break toward the lower index
    std::sort(top.begin(), top.end(), [](const Sample& a, const Sample& b) {
      return a.value != b.value ? a.value > b.value : a.index < b.index;
    });
    if (static_cast<int>(top.size()) > cfg.top_k) top.resize(cfg.top_k);
  }

  double best = -1.0;
  Eigen::VectorXd best_w;
  std::uint64_t best_index = 0;
  for (const Sample& s : top) {
    Eigen::VectorXd w = s.w;
    double f = s.value;
    double span = 0.45;
    for (int round = 0; round < cfg.restarts; ++round) {
      sphere_ascent(obj, w, f, span, 6);
      span *= 0.25;
    }
    if (p >= 3) vertex_chart_ascent(obj, w, f);
    if (f > best || (f == best && s.index < best_index)) {
      best = f;
      best_w = w;
      best_index = s.index;
    }
  }

  SupResult out;
  out.sup = best;
  Eigen::Matrix<double, 5, 1> full = Eigen::Matrix<double, 5, 1>::Zero();
  for (int k = 0; k < dim; ++k) full[k] = best_w[k];
  out.witness = ProjectiveClass::make(p, full);
  out.evaluations = obj.evals;

  const double family_bound = p <= 2 ? 2.0 : maximize_parabola().L0;
  if (out.sup > family_bound + 1e-6) {
    std::ostringstream msg;
    msg << "sup_length: sampled length " << std::setprecision(17) << out.sup
        << " exceeds the family bound " << family_bound << " at class [";
    for (int k = 0; k < 5; ++k) {
      msg << (k ? ", " : "") << out.witness.coeffs[k];
    }
    msg << "]";
    throw Error(msg.str());
  }
  return out;
}

}  // namespace widths
