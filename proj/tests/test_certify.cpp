#include <doctest.h>

#include <cmath>

#include "widths/certify.hpp"

using namespace widths;

namespace {

const Domain unit_disk = Domain::disk(1.0);
const Domain near_circle = Domain::ellipse(1.02, 0.98);

CertifyConfig fast_config(std::uint64_t seed = 1) {
  CertifyConfig cfg;
  cfg.sweepout.budget = 1500;
  cfg.sweepout.seed = seed;
  return cfg;
}

bool has_mass(const std::vector<CandidateNetwork>& list, double m) {
  return std::any_of(list.begin(), list.end(), [&](const CandidateNetwork& c) {
    return std::abs(c.mass - m) < 1e-9;
  });
}

}  // namespace

TEST_CASE("polygon exclusion branches") {
  const double bound = 3.0 * std::sqrt(2.0);
  const PolygonExclusion big = polygon_exclusion(5, 0.8, bound);
  CHECK(big.branch == ExclusionBranch::CausticPerimeter);
  CHECK(big.perimeter_bound == doctest::Approx(2 * M_PI * 0.8));

  const PolygonExclusion sides = polygon_exclusion(4, 0.5, bound);
  CHECK(sides.branch == ExclusionBranch::SideLength);
  CHECK(sides.perimeter_bound == doctest::Approx(4 * 2 * std::sqrt(0.75)));
  CHECK(sides.perimeter_bound > 4 * 1.4);

  const PolygonExclusion tri = polygon_exclusion(3, 0.5, bound);
  CHECK(tri.branch == ExclusionBranch::Triangle);
  CHECK(tri.perimeter_bound == doctest::Approx(3 * std::sqrt(3.0)));

  CHECK_THROWS_AS(polygon_exclusion(4, 0.3, 10.0), NotExcludable);
  CHECK_THROWS_AS(polygon_exclusion(2, 0.5, bound), InvalidParameter);
}

TEST_CASE("enumeration on the disk reproduces the classification") {
  const double bound = 3.0 * std::sqrt(2.0);
  const EnumerationResult result = enumerate_candidates(unit_disk, bound, 8);

  REQUIRE(result.accepted.size() == 2);
  CHECK(result.accepted[0].mass == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(result.accepted[1].mass == doctest::Approx(4.0).epsilon(1e-12));

  // the tripod probe is rejected by integrality with the 3/2 witness
  bool tripod_rejected = false;
  for (const auto& r : result.rejected) {
    if (r.description.find("tripod") != std::string::npos) {
      tripod_rejected = true;
      CHECK(r.reason.find("density") != std::string::npos);
      CHECK(r.reason.find("1.5") != std::string::npos);
    }
  }
  CHECK(tripod_rejected);

  // every billiard polygon from k = 3 to 8 is excluded with a branch reason
  for (int k = 3; k <= 8; ++k) {
    bool found = false;
    for (const auto& r : result.rejected) {
      if (r.description.find("closed " + std::to_string(k) + "-polygon") !=
          std::string::npos) {
        found = true;
        const bool branch_reason =
            r.reason.find("2*pi*") != std::string::npos ||
            r.reason.find("> 1.4") != std::string::npos ||
            r.reason.find("3*sqrt(3)") != std::string::npos;
        CHECK(branch_reason);
      }
    }
    CHECK(found);
  }
}

TEST_CASE("enumeration on the ellipse lists the five diameter sums") {
  const EnumerationResult result = enumerate_candidates(near_circle, 4.2, 8);
  REQUIRE(result.accepted.size() == 5);
  CHECK(has_mass(result.accepted, 1.96));
  CHECK(has_mass(result.accepted, 2.04));
  CHECK(has_mass(result.accepted, 3.92));
  CHECK(has_mass(result.accepted, 4.00));
  CHECK(has_mass(result.accepted, 4.08));
}

TEST_CASE("candidates satisfy the stationarity invariants") {
  for (const Domain& dom : {unit_disk, near_circle}) {
    const EnumerationResult result = enumerate_candidates(dom, 4.2, 8);
    for (const auto& c : result.accepted) {
      CHECK(interior_residual(c.network) <= 1e-9);
      CHECK(free_boundary_residual(c.network, dom) <= 1e-9);
      CHECK(integrality_filter(c.network).pass);
    }
  }
}

TEST_CASE("ls lower bound") {
  // three balls of radius 0.4 on a ring of radius 0.55
  std::vector<SubdomainSpec> balls;
  for (int k = 0; k < 3; ++k) {
    const double phi = 2.0 * M_PI * k / 3.0;
    balls.push_back({Domain::disk(0.4), 0.55 * Vec2(std::cos(phi), std::sin(phi)),
                     0.0, 0.8});
  }
  CHECK(ls_lower_bound(unit_disk, balls) == doctest::Approx(2.4));

  CHECK(ls_lower_bound(unit_disk, {SubdomainSpec{Domain::disk(0.4), Vec2(0.1, 0),
                                                 0.0, 0.8}}) ==
        doctest::Approx(0.8));

  // half-scale quarter-turned copies at x = +-b/2 touch at the origin and
  // stay inside for a^2 <= 2 b^2; the bound is twice the copy width
  std::vector<SubdomainSpec> copies;
  for (double sgn : {1.0, -1.0}) {
    copies.push_back({Domain::ellipse(1.02 / 2, 0.98 / 2),
                      Vec2(sgn * 0.98 / 2, 0.0), M_PI / 2, 1.02});
  }
  CHECK(ls_lower_bound(near_circle, copies) == doctest::Approx(2.04));

  // overlap detection
  std::vector<SubdomainSpec> overlapping = {
      {Domain::disk(0.4), Vec2(0.2, 0), 0.0, 0.8},
      {Domain::disk(0.4), Vec2(-0.2, 0), 0.0, 0.8}};
  CHECK_THROWS_AS(ls_lower_bound(unit_disk, overlapping), DisjointnessViolated);

  // containment violation
  std::vector<SubdomainSpec> outside = {
      {Domain::disk(0.4), Vec2(0.7, 0), 0.0, 0.8}};
  CHECK_THROWS_AS(ls_lower_bound(unit_disk, outside), ContainmentViolated);
}

TEST_CASE("disk certificates") {
  const CertifyConfig cfg = fast_config();
  double prev = 0.0;
  for (int p = 1; p <= 4; ++p) {
    const WidthCertificate cert = certify(p, unit_disk, cfg);
    REQUIRE(cert.conclusion.size() == 1);
    const double value = cert.conclusion[0].mass;
    CHECK(value == doctest::Approx(p <= 2 ? 2.0 : 4.0).epsilon(1e-12));
    CHECK(value >= prev);
    CHECK(cert.lower.value <= value + 1e-9);
    CHECK(value <= cert.upper.value + 1e-9);
    prev = value;
    if (p >= 3) {
      CHECK(cert.lower.value == doctest::Approx(2.4));
      CHECK(cert.lower.components.size() == 3);
    }
  }
}

TEST_CASE("ellipse certificates") {
  const CertifyConfig cfg = fast_config();
  const WidthCertificate c1 = certify(1, near_circle, cfg);
  REQUIRE(c1.conclusion.size() == 1);
  CHECK(c1.conclusion[0].mass == doctest::Approx(1.96).epsilon(1e-12));
  CHECK(c1.conclusion[0].symbol == MassSymbol::SmallDiameter);

  const WidthCertificate c2 = certify(2, near_circle, cfg);
  REQUIRE(c2.conclusion.size() == 1);
  CHECK(c2.conclusion[0].mass == doctest::Approx(2.04).epsilon(1e-12));
  CHECK(c2.conclusion[0].symbol == MassSymbol::LargeDiameter);
  CHECK(c1.conclusion[0].mass < c2.conclusion[0].mass);

  for (int p : {3, 4}) {
    const WidthCertificate cert = certify(p, near_circle, cfg);
    REQUIRE(cert.conclusion.size() == 3);
    CHECK(cert.conclusion[0].mass == doctest::Approx(3.92));
    CHECK(cert.conclusion[1].mass == doctest::Approx(4.00));
    CHECK(cert.conclusion[2].mass == doctest::Approx(4.08));
  }
}

TEST_CASE("certificate stability in the window") {
  const CertifyConfig cfg = fast_config();
  for (double da : {-1e-3, 0.0, 1e-3}) {
    for (double db : {-1e-3, 1e-3}) {
      const Domain dom = Domain::ellipse(1.02 + da, 0.98 + db);
      const WidthCertificate c1 = certify(1, dom, cfg);
      REQUIRE(c1.conclusion.size() == 1);
      CHECK(c1.conclusion[0].symbol == MassSymbol::SmallDiameter);
      const WidthCertificate c3 = certify(3, dom, cfg);
      REQUIRE(c3.conclusion.size() == 3);
      CHECK(c3.conclusion[0].symbol == MassSymbol::TwoSmall);
      CHECK(c3.conclusion[1].symbol == MassSymbol::SmallPlusLarge);
      CHECK(c3.conclusion[2].symbol == MassSymbol::TwoLarge);
    }
  }
}

TEST_CASE("domains outside the certified window are refused") {
  const CertifyConfig cfg = fast_config();
  CHECK_THROWS_AS(certify(1, Domain::ellipse(1.2, 0.8), cfg),
                  InconclusiveCertificate);
  CHECK_THROWS_AS(certify(1, Domain::disk(2.0), cfg), InconclusiveCertificate);
  CHECK_THROWS_AS(certify(5, unit_disk, cfg), InvalidParameter);
}
