#include "widths/certify.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace widths {

const char* to_string(MassSymbol s) {
  switch (s) {
    case MassSymbol::SmallDiameter: return "d";
    case MassSymbol::LargeDiameter: return "D";
    case MassSymbol::TwoSmall: return "2d";
    case MassSymbol::SmallPlusLarge: return "d+D";
    case MassSymbol::TwoLarge: return "2D";
    case MassSymbol::Polygon: return "polygon";
    case MassSymbol::Other: return "other";
  }
  return "?";
}

namespace {

Junction boundary_junction(const Domain& dom, double t) {
  return Junction{dom.boundary_point(t), JunctionLocation::Boundary, t};
}

GeodesicNetwork diameter_network(const Domain& dom, double t_axis,
                                 double theta) {
  GeodesicNetwork net;
  net.junctions = {boundary_junction(dom, t_axis),
                   boundary_junction(dom, t_axis + M_PI)};
  net.segments = {{0, 1, theta}};
  return net;
}

GeodesicNetwork two_diameter_network(const Domain& dom) {
  GeodesicNetwork net;
  net.junctions = {boundary_junction(dom, 0.0), boundary_junction(dom, M_PI),
                   boundary_junction(dom, M_PI / 2.0),
                   boundary_junction(dom, 3.0 * M_PI / 2.0)};
  net.segments = {{0, 1, 1.0}, {2, 3, 1.0}};
  return net;
}

GeodesicNetwork tripod_network(const Domain& dom) {
  GeodesicNetwork net;
  net.junctions.push_back(
      Junction{Vec2::Zero(), JunctionLocation::Interior, 0.0});
  for (int k = 0; k < 3; ++k) {
    net.junctions.push_back(
        boundary_junction(dom, M_PI / 2.0 + k * 2.0 * M_PI / 3.0));
  }
  net.segments = {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}};
  return net;
}

GeodesicNetwork orbit_network(const Domain& dom, const BilliardOrbit& orb) {
  GeodesicNetwork net;
  if (orb.period == 2) {
    // The 2-orbit traverses one diameter twice; the underlying network is
    // the diameter with multiplicity one.
    return diameter_network(dom, orb.chords[0].from.t, 1.0);
  }
  const int k = static_cast<int>(orb.chords.size());
  for (const auto& c : orb.chords) {
    net.junctions.push_back(boundary_junction(dom, c.from.t));
  }
  for (int i = 0; i < k; ++i) {
    net.segments.push_back({i, (i + 1) % k, 1.0});
  }
  return net;
}

struct UniverseEntry {
  std::string description;
  GeodesicNetwork network;
  MassSymbol symbol = MassSymbol::Other;
  int polygon_k = 0;       // > 0 for billiard polygons
  double caustic_r = 0.0;  // effective caustic radius for those
};

constexpr double kResidualTol = 1e-9;

}  // namespace

PolygonExclusion polygon_exclusion(int k, double r, double bound) {
  if (k < 3 || !(r > 0.0 && r < 1.0) || !(bound > 0.0)) {
    throw InvalidParameter("polygon_exclusion: need k >= 3, 0 < r < 1");
  }
  std::ostringstream reason;
  if (k == 3) {
    const double perim = 3.0 * std::sqrt(3.0);
    if (perim > bound) {
      reason << "3-polygon perimeter 3*sqrt(3) = " << perim << " > " << bound;
      return {ExclusionBranch::Triangle, perim, reason.str()};
    }
  }
  const double caustic_perimeter = 2.0 * M_PI * r;
  if (caustic_perimeter > bound) {
    reason << "perimeter >= caustic perimeter 2*pi*" << r << " = "
           << caustic_perimeter << " > " << bound;
    return {ExclusionBranch::CausticPerimeter, caustic_perimeter,
            reason.str()};
  }
  if (k >= 4) {
    const double side = 2.0 * std::sqrt(1.0 - r * r);
    const double perim = k * side;
    if (perim > bound) {
      reason << k << " sides, each 2*sqrt(1-r^2) = " << side << " > 1.4; "
             << k << "*" << side << " = " << perim << " > " << bound;
      return {ExclusionBranch::SideLength, perim, reason.str()};
    }
  }
  throw NotExcludable("polygon_exclusion: no branch beats the bound");
}

EnumerationResult enumerate_candidates(const Domain& dom, double mass_bound,
                                       int k_max) {
  if (!(mass_bound > 0.0)) {
    throw InvalidParameter("enumerate_candidates: mass_bound must be > 0");
  }
  if (k_max < 5) {
    throw InvalidParameter("enumerate_candidates: k_max must be >= 5");
  }

  std::vector<UniverseEntry> universe;
  const bool ellipse = !dom.is_disk();

  universe.push_back({"minor-axis diameter", diameter_network(dom, M_PI / 2, 1.0),
                      MassSymbol::SmallDiameter, 0, 0.0});
  if (ellipse) {
    universe.push_back({"major-axis diameter", diameter_network(dom, 0.0, 1.0),
                        MassSymbol::LargeDiameter, 0, 0.0});
  }
  universe.push_back({"two perpendicular diameters", two_diameter_network(dom),
                      MassSymbol::SmallPlusLarge, 0, 0.0});
  universe.push_back({"minor-axis diameter, multiplicity 2",
                      diameter_network(dom, M_PI / 2, 2.0),
                      MassSymbol::TwoSmall, 0, 0.0});
  if (ellipse) {
    universe.push_back({"major-axis diameter, multiplicity 2",
                        diameter_network(dom, 0.0, 2.0), MassSymbol::TwoLarge,
                        0, 0.0});
  }
  universe.push_back(
      {"triple junction tripod", tripod_network(dom), MassSymbol::Other, 0, 0.0});

  for (int k = 2; k <= k_max; ++k) {
    try {
      const BilliardOrbit orb = find_closed_orbit(dom, k, M_PI / 2.0);
      UniverseEntry e;
      std::ostringstream name;
      name << "closed " << k << "-polygon orbit";
      e.description = name.str();
      e.network = orbit_network(dom, orb);
      e.symbol = k == 2 ? MassSymbol::SmallDiameter : MassSymbol::Polygon;
      if (k >= 3) {
        e.polygon_k = k;
        const Caustic caustic = caustic_of(dom, orb.chords.front());
        const double A1 = caustic.a * caustic.a - caustic.lambda;
        const double B1 = caustic.b * caustic.b - caustic.lambda;
        // The caustic perimeter is at least 2*pi times the geometric mean of
        // its semi-axes.
        e.caustic_r = std::pow(std::max(A1 * B1, 0.0), 0.25);
      }
      universe.push_back(std::move(e));
    } catch (const NoConvergence&) {
      // no such orbit through the chosen start; nothing to consider
    }
  }

  EnumerationResult result;
  for (auto& entry : universe) {
    entry.network.validate();
    const double m = mass(entry.network);
    const auto reject = [&](const std::string& why) {
      result.rejected.push_back({entry.description, m, why});
    };

    const double ri = interior_residual(entry.network);
    const double rb = free_boundary_residual(entry.network, dom);
    if (ri > kResidualTol || rb > kResidualTol) {
      std::ostringstream why;
      why << "stationarity residuals (interior " << ri << ", boundary " << rb
          << ") exceed " << kResidualTol;
      reject(why.str());
      continue;
    }
    const IntegralityReport integrality = integrality_filter(entry.network);
    if (!integrality.pass) {
      std::ostringstream why;
      why << "non-integer interior junction density";
      for (const auto& w : integrality.witnesses) {
        why << "; junction " << w.junction << " has density " << w.density;
      }
      reject(why.str());
      continue;
    }
    if (m >= mass_bound) {
      if (entry.polygon_k >= 3) {
        reject(polygon_exclusion(entry.polygon_k, entry.caustic_r, mass_bound)
                   .reason);
      } else {
        std::ostringstream why;
        why << "mass " << m << " >= bound " << mass_bound;
        reject(why.str());
      }
      continue;
    }
    const DensityBoundsReport density =
        check_density_bounds(entry.network, dom, mass_bound);
    if (!density.ok) {
      reject("density bound violated");
      continue;
    }

    const bool duplicate =
        std::any_of(result.accepted.begin(), result.accepted.end(),
                    [&](const CandidateNetwork& c) {
                      return std::abs(c.mass - m) <= 1e-9;
                    });
    if (duplicate) continue;
    result.accepted.push_back(
        {entry.description, entry.network, m, entry.symbol});
  }
  std::sort(result.accepted.begin(), result.accepted.end(),
            [](const CandidateNetwork& a, const CandidateNetwork& b) {
              return a.mass < b.mass;
            });
  return result;
}

namespace {

/// Support radius of a rotated ellipse-shaped subdomain in direction u.
double support_radius(const SubdomainSpec& sub, const Vec2& u) {
  const Vec2 e1(std::cos(sub.rotation), std::sin(sub.rotation));
  const Vec2 e2(-std::sin(sub.rotation), std::cos(sub.rotation));
  const double ca = sub.shape.a() * u.dot(e1);
  const double cb = sub.shape.b() * u.dot(e2);
  return std::sqrt(ca * ca + cb * cb);
}

Vec2 sub_boundary_point(const SubdomainSpec& sub, double s) {
  const double c = std::cos(sub.rotation), sn = std::sin(sub.rotation);
  const Vec2 local(sub.shape.a() * std::cos(s), sub.shape.b() * std::sin(s));
  return sub.center + Vec2(c * local.x() - sn * local.y(),
                           sn * local.x() + c * local.y());
}

}  // namespace

double ls_lower_bound(const Domain& dom,
                      const std::vector<SubdomainSpec>& subs) {
  if (subs.empty()) throw InvalidParameter("ls_lower_bound: no subdomains");
  // Non-overlap along the center line; the constructions used here are
  // center-symmetric, so that line is the separating direction. Touching is
  // allowed.
  for (std::size_t i = 0; i < subs.size(); ++i) {
    for (std::size_t j = i + 1; j < subs.size(); ++j) {
      const Vec2 delta = subs[j].center - subs[i].center;
      const double dist = delta.norm();
      if (dist == 0.0) {
        throw DisjointnessViolated("ls_lower_bound: coincident centers");
      }
      const Vec2 u = delta / dist;
      const double need = support_radius(subs[i], u) + support_radius(subs[j], u);
      if (dist < need - 1e-12) {
        throw DisjointnessViolated("ls_lower_bound: subdomains overlap");
      }
    }
  }
  // Strict containment in the open domain, with margin.
  for (const auto& sub : subs) {
    for (int k = 0; k < 720; ++k) {
      const Vec2 p = sub_boundary_point(sub, 2.0 * M_PI * k / 720.0);
      const double rho_hat = std::sqrt(dom.implicit_value(p) + 1.0);
      const double margin = (1.0 - rho_hat) * dom.b();
      if (!(margin > 1e-9)) {
        throw ContainmentViolated("ls_lower_bound: subdomain not inside");
      }
    }
  }
  double total = 0.0;
  for (const auto& sub : subs) total += sub.first_width;
  return total;
}

namespace {

std::vector<SubdomainSpec> three_ball_construction(const Domain& dom) {
  const double ring = dom.is_disk() ? 0.55 : 0.54;
  std::vector<SubdomainSpec> subs;
  for (int k = 0; k < 3; ++k) {
    const double phi = M_PI / 2.0 + k * 2.0 * M_PI / 3.0;
    subs.push_back({Domain::disk(0.4),
                    ring * Vec2(std::cos(phi), std::sin(phi)), 0.0, 0.8});
  }
  return subs;
}

/// Half-scale copies of the domain, rotated a quarter turn and shifted to
/// x = +-b/2; they touch at the origin and need a^2 <= 2 b^2 to stay inside.
std::vector<SubdomainSpec> two_half_copies(const Domain& dom,
                                           double assumed_first_width) {
  std::vector<SubdomainSpec> subs;
  for (double sgn : {1.0, -1.0}) {
    subs.push_back({Domain::ellipse(dom.a() / 2.0, dom.b() / 2.0),
                    Vec2(sgn * dom.b() / 2.0, 0.0), M_PI / 2.0,
                    assumed_first_width / 2.0});
  }
  return subs;
}

SpectrumEntry to_entry(const CandidateNetwork& c) {
  return SpectrumEntry{c.mass, c.symbol, c.description};
}

}  // namespace

WidthCertificate certify(int p, const Domain& dom, const CertifyConfig& cfg) {
  if (p < 1 || p > 4) throw InvalidParameter("certify: p must be in 1..4");
  const double a = dom.a(), b = dom.b();
  if (dom.is_disk()) {
    if (a != 1.0) {
      throw InconclusiveCertificate("certify: only the unit disk is certified");
    }
  } else {
    const double w = cfg.window_eccentricity;
    if (std::abs(a - 1.0) > w || std::abs(b - 1.0) > w || a * a > 2.0 * b * b) {
      throw InconclusiveCertificate(
          "certify: ellipse outside the certified near-circle window");
    }
  }

  WidthCertificate cert;
  cert.p = p;
  cert.domain_a = a;
  cert.domain_b = b;

  // Upper bound: p-sweepout by degree <= 2 varieties on the unit disk,
  // pushed forward by (x, y) -> (a x, b y), which stretches lengths by at
  // most max(a, b). The analytic family bound is used as the certified
  // value; the sampled supremum must agree with it closely.
  const SupResult sup = sup_length(p, cfg.sweepout);
  const double family_bound = p <= 2 ? 2.0 : maximize_parabola().L0;
  if (sup.sup > family_bound + 1e-6 || sup.sup < family_bound - 2e-3) {
    throw InconclusiveCertificate(
        "certify: sampled sweepout supremum inconsistent with the family "
        "bound");
  }
  const double stretch = std::max(a, b);
  cert.upper.value = stretch * family_bound;
  cert.upper.witness = sup.witness;
  cert.upper.family_bound = family_bound;
  cert.upper.stretch = stretch;

  // Candidate spectrum from the classification of low-mass stationary
  // networks.
  const EnumerationResult enumeration =
      enumerate_candidates(dom, cert.upper.value + 1e-6, cfg.k_max);
  cert.rejected = enumeration.rejected;
  for (const auto& c : enumeration.accepted) {
    cert.spectrum.push_back(to_entry(c));
  }
  if (cert.spectrum.empty()) {
    throw InconclusiveCertificate("certify: empty candidate spectrum");
  }

  const double d_small = 2.0 * b;
  const double ellipse_proper = (a - b) > 1e-12;

  if (p >= 3) {
    const auto balls = three_ball_construction(dom);
    const double value = ls_lower_bound(dom, balls);
    cert.lower.value = value;
    cert.lower.strict = false;
    cert.lower.method = "lusternik-schnirelmann sum over three disjoint balls";
    for (const auto& s : balls) cert.lower.components.push_back(s.first_width);
  } else if (ellipse_proper && p == 2) {
    // With omega_1 = d pinned below, restricting a 2-sweepout to two
    // disjoint half-scale copies forces omega_2 strictly above d.
    ls_lower_bound(dom, two_half_copies(dom, d_small));  // geometry check
    cert.lower.value = d_small;
    cert.lower.strict = true;
    cert.lower.method =
        "lusternik-schnirelmann two-half-copy bound assuming omega_1 = d";
    cert.lower.components = {d_small / 2.0, d_small / 2.0};
  } else {
    cert.lower.value = cert.spectrum.front().mass;
    cert.lower.strict = false;
    cert.lower.method = "smallest admissible candidate mass";
  }

  // Ellipse tie-break for p = 1: if omega_1 were some w, the two-half-copy
  // bound would force omega_2 > w, impossible once w reaches the p = 2
  // upper bound. That eliminates the large diameter.
  double eliminate_above = std::numeric_limits<double>::infinity();
  if (ellipse_proper && p == 1) {
    const double upper2 = stretch * 2.0;
    for (const auto& entry : cert.spectrum) {
      ls_lower_bound(dom, two_half_copies(dom, entry.mass));  // geometry check
      if (entry.mass >= upper2 - 1e-9) {
        eliminate_above = std::min(eliminate_above, entry.mass);
      }
    }
  }

  for (const auto& entry : cert.spectrum) {
    const bool above_lower = cert.lower.strict
                                 ? entry.mass > cert.lower.value + 1e-9
                                 : entry.mass >= cert.lower.value - 1e-9;
    const bool below_upper = entry.mass <= cert.upper.value + 1e-9;
    const bool eliminated = entry.mass >= eliminate_above - 1e-9;
    if (above_lower && below_upper && !eliminated) {
      cert.conclusion.push_back(entry);
    }
  }

  if (cert.conclusion.empty()) {
    throw InconclusiveCertificate("certify: empty conclusion");
  }
  if (dom.is_disk() && cert.conclusion.size() != 1) {
    throw InconclusiveCertificate(
        "certify: disk certificate must single out one value");
  }
  return cert;
}

}  // namespace widths
