#ifndef WIDTHS_CERTIFY_HPP
#define WIDTHS_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "widths/billiards.hpp"
#include "widths/network.hpp"
#include "widths/sweepouts.hpp"

namespace widths {

/// Symbolic value of a candidate mass in terms of the domain's small and
/// large diameters d = 2b, D = 2a. On the disk d == D and the single- and
/// double-diameter symbols below coincide numerically.
enum class MassSymbol {
  SmallDiameter,      // d
  LargeDiameter,      // D
  TwoSmall,           // 2d
  SmallPlusLarge,     // d + D
  TwoLarge,           // 2D
  Polygon,            // closed billiard k-polygon
  Other,
};

const char* to_string(MassSymbol s);

struct CandidateNetwork {
  std::string description;
  GeodesicNetwork network;
  double mass = 0.0;
  MassSymbol symbol = MassSymbol::Other;
};

struct EnumerationResult {
  /// Admissible candidates, one representative per distinct mass.
  std::vector<CandidateNetwork> accepted;
  struct Rejection {
    std::string description;
    double mass = 0.0;
    std::string reason;
  };
  std::vector<Rejection> rejected;
};

/// Candidate universe: single diameters with multiplicity one and two,
/// unions of two diameters, a junction tripod probe, and convex closed
/// k-orbits for 2 <= k <= k_max. Candidates are filtered by stationarity
/// residuals, the integrality of junction densities, mass below the bound
/// and the density bounds; billiard polygons record the exclusion branch
/// that rules them out.
EnumerationResult enumerate_candidates(const Domain& dom, double mass_bound,
                                       int k_max);

enum class ExclusionBranch {
  CausticPerimeter,  // perimeter >= 2 pi r > bound
  SideLength,        // k sides, each 2 sqrt(1 - r^2) long
  Triangle,          // the 3-orbit has perimeter 3 sqrt(3)
};

struct PolygonExclusion {
  ExclusionBranch branch;
  double perimeter_bound = 0.0;  // the lower bound that beats `bound`
  std::string reason;
};

/// Why a closed k-polygon tangent to a caustic of radius r cannot have
/// perimeter below `bound`. Throws NotExcludable when no branch applies.
PolygonExclusion polygon_exclusion(int k, double r, double bound);

/// A convex subdomain with a known first width, placed by rotation and
/// translation.
struct SubdomainSpec {
  Domain shape = Domain::disk(1.0);
  Vec2 center = Vec2::Zero();
  double rotation = 0.0;
  double first_width = 0.0;
};

/// Sum of the subdomains' first widths, after verifying that the subdomains
/// are pairwise non-overlapping (touching is allowed) and contained in the
/// open domain with margin > 1e-9.
double ls_lower_bound(const Domain& dom,
                      const std::vector<SubdomainSpec>& subs);

struct CertifyConfig {
  SamplingConfig sweepout = {};
  int k_max = 8;
  /// Admissible ellipse window: |a-1|, |b-1| <= window_eccentricity, a >= b,
  /// and a^2 <= 2 b^2 (needed by the two-copy lower-bound construction).
  double window_eccentricity = 0.05;
};

struct SpectrumEntry {
  double mass = 0.0;
  MassSymbol symbol = MassSymbol::Other;
  std::string description;
};

struct LowerEvidence {
  double value = 0.0;
  bool strict = false;  // candidates equal to the bound are also excluded
  std::string method;
  std::vector<double> components;  // subdomain first widths when applicable
};

struct UpperEvidence {
  double value = 0.0;
  ProjectiveClass witness;
  double family_bound = 0.0;   // analytic bound for the sweepout family
  double stretch = 1.0;        // Lipschitz factor mapping the disk sweepout
};

struct WidthCertificate {
  int p = 0;
  double domain_a = 1.0;
  double domain_b = 1.0;
  LowerEvidence lower;
  UpperEvidence upper;
  std::vector<SpectrumEntry> spectrum;
  std::vector<SpectrumEntry> conclusion;
  std::vector<EnumerationResult::Rejection> rejected;
};

/// Assembles the width certificate for p in 1..4 on the unit disk or a
/// near-circular ellipse. Throws InconclusiveCertificate when the spectrum
/// window logic does not single out the admissible values.
WidthCertificate certify(int p, const Domain& dom,
                         const CertifyConfig& cfg = {});

}  // namespace widths

#endif
