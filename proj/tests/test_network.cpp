#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "widths/network.hpp"

using namespace widths;
using namespace widths::testing;

namespace {
const Domain unit_disk = Domain::disk(1.0);
}

TEST_CASE("mass") {
  CHECK(mass(diameter(unit_disk, 0.0)) == doctest::Approx(2.0));
  CHECK(mass(two_diameters(unit_disk)) == doctest::Approx(4.0));
  CHECK(mass(diameter(unit_disk, 0.0, 2.0)) == doctest::Approx(4.0));
}

TEST_CASE("interior residual") {
  CHECK(interior_residual(tripod(unit_disk)) < 1e-14);

  // two collinear segments through an interior junction: a regular junction
  GeodesicNetwork collinear;
  collinear.junctions = {on_boundary(unit_disk, 0.0),
                         {Vec2(0, 0), JunctionLocation::Interior, 0.0},
                         on_boundary(unit_disk, M_PI)};
  collinear.segments = {{0, 1, 1.0}, {1, 2, 1.0}};
  const auto report = interior_stationarity(collinear);
  CHECK(report.residual < 1e-14);
  CHECK(report.undersized_junctions.empty());

  // right-angle junction: residual sqrt(2), and it is undersized (m = 2)
  GeodesicNetwork bent;
  bent.junctions = {on_boundary(unit_disk, M_PI),
                    {Vec2(0, 0), JunctionLocation::Interior, 0.0},
                    on_boundary(unit_disk, 3 * M_PI / 2)};
  bent.segments = {{0, 1, 1.0}, {1, 2, 1.0}};
  const auto bent_report = interior_stationarity(bent);
  CHECK(bent_report.residual == doctest::Approx(std::sqrt(2.0)));
  CHECK(bent_report.undersized_junctions.size() == 1);
}

TEST_CASE("free boundary residual") {
  CHECK(free_boundary_residual(diameter(unit_disk, 0.3), unit_disk) < 1e-12);

  // a single chord meeting the boundary at 45 degrees
  const Chord c = chord_from(unit_disk, 0.0,
                             Direction(Vec2(-1, 1).normalized()));
  GeodesicNetwork oblique;
  oblique.junctions = {on_boundary(unit_disk, c.from.t),
                       on_boundary(unit_disk, c.to.t)};
  oblique.segments = {{0, 1, 1.0}};
  CHECK(free_boundary_residual(oblique, unit_disk) ==
        doctest::Approx(std::cos(M_PI / 4)).epsilon(1e-9));

  // reflected pair with equal boundary angles balances
  const BilliardOrbit orb = find_closed_orbit(unit_disk, 3, 0.2);
  CHECK(free_boundary_residual(from_orbit(unit_disk, orb), unit_disk) < 1e-10);

  GeodesicNetwork off;
  off.junctions = {{Vec2(0.5, 0), JunctionLocation::Boundary, 0.0},
                   on_boundary(unit_disk, M_PI)};
  off.segments = {{0, 1, 1.0}};
  CHECK_THROWS_AS(free_boundary_residual(off, unit_disk), JunctionOffBoundary);
}

TEST_CASE("radial residual") {
  std::mt19937_64 rng(3);
  const GeodesicNetwork star = balanced_star(unit_disk, Vec2(0.2, -0.1), rng);
  REQUIRE(interior_residual(star) < 1e-12);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    CHECK(radial_residual(star, Vec2(coord(rng), coord(rng))) < 1e-10);
  }
  CHECK(radial_residual(diameter(unit_disk, 0.4), Vec2(0.3, 0.7)) == 0.0);

  // an unbalanced junction has nonzero residual for generic x, but not when
  // x is the junction itself
  GeodesicNetwork bent;
  bent.junctions = {on_boundary(unit_disk, M_PI),
                    {Vec2(0, 0), JunctionLocation::Interior, 0.0},
                    on_boundary(unit_disk, 3 * M_PI / 2)};
  bent.segments = {{0, 1, 1.0}, {1, 2, 1.0}};
  CHECK(radial_residual(bent, Vec2(0, 0)) < 1e-15);
  CHECK(radial_residual(bent, Vec2(0.5, 0.5)) > 0.1);
}

TEST_CASE("density") {
  const GeodesicNetwork diam = diameter(unit_disk, 0.0);
  CHECK(density_at(diam, Vec2(0.37, 0)) == doctest::Approx(1.0));
  CHECK(density_at(diam, Vec2(1, 0)) == doctest::Approx(0.5));
  CHECK(density_at(tripod(unit_disk), Vec2(0, 0)) == doctest::Approx(1.5));
  CHECK(density_at(two_diameters(unit_disk), Vec2(0, 0)) ==
        doctest::Approx(2.0));
  CHECK_THROWS_AS(density_at(diam, Vec2(0.3, 0.4)), PointNotOnSupport);
}

TEST_CASE("density is additive over disjoint unions") {
  GeodesicNetwork chords;
  const Chord c1 = chord_from(unit_disk, 0.1, unit_disk.inward_normal(0.1));
  chords.junctions = {on_boundary(unit_disk, 0.1),
                      on_boundary(unit_disk, c1.to.t)};
  chords.segments = {{0, 1, 1.0}};
  GeodesicNetwork both = chords;
  both.junctions.push_back(on_boundary(unit_disk, 1.2));
  both.junctions.push_back(on_boundary(unit_disk, 1.2 + M_PI));
  both.segments.push_back({2, 3, 1.0});
  const Vec2 probe = 0.31 * (chords.junctions[0].position) +
                     0.69 * (chords.junctions[1].position);
  CHECK(density_at(both, probe) == doctest::Approx(density_at(chords, probe)));
  CHECK(density_at(both, Vec2::Zero()) == doctest::Approx(2.0));
}

TEST_CASE("boundary forces") {
  const GeodesicNetwork diam = diameter(unit_disk, 0.0);
  const auto at_center = boundary_forces(diam, Vec2::Zero());
  REQUIRE(at_center.size() == 2);
  for (const auto& f : at_center) {
    CHECK(f.force.norm() == doctest::Approx(1.0));
    CHECK(f.radial == doctest::Approx(1.0));
    CHECK(f.distance == doctest::Approx(1.0));
  }
  const auto at_endpoint = boundary_forces(diam, Vec2(-1, 0));
  REQUIRE(at_endpoint.size() == 1);
  CHECK(at_endpoint[0].radial == doctest::Approx(1.0));
  CHECK(at_endpoint[0].distance == doctest::Approx(2.0));

  const auto four = boundary_forces(two_diameters(unit_disk), Vec2::Zero());
  REQUIRE(four.size() == 4);
  for (const auto& f : four) CHECK(f.radial == doctest::Approx(1.0));
}

TEST_CASE("mass via forces") {
  CHECK(mass_via_forces(diameter(unit_disk, 0.0), Vec2::Zero()) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mass_via_forces(diameter(unit_disk, 0.0), Vec2(-1, 0)) ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(mass_via_forces(two_diameters(unit_disk), Vec2::Zero()) ==
        doctest::Approx(4.0).epsilon(1e-12));

  GeodesicNetwork bent;
  bent.junctions = {on_boundary(unit_disk, M_PI),
                    {Vec2(0, 0), JunctionLocation::Interior, 0.0},
                    on_boundary(unit_disk, 3 * M_PI / 2)};
  bent.segments = {{0, 1, 1.0}, {1, 2, 1.0}};
  CHECK_THROWS_AS(mass_via_forces(bent, Vec2(0.5, 0.5)),
                  RadialConditionViolated);
}

TEST_CASE("mass identity on randomized stationary networks") {
  std::mt19937_64 rng(2026);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  std::uniform_real_distribution<double> inside(-0.45, 0.45);
  for (int trial = 0; trial < 25; ++trial) {
    GeodesicNetwork net;
    switch (trial % 3) {
      case 0:
        net = balanced_star(unit_disk, Vec2(inside(rng), inside(rng)), rng);
        break;
      case 1:
        net = from_orbit(unit_disk,
                         find_closed_orbit(unit_disk, 3 + trial % 4,
                                           coord(rng)));
        break;
      default:
        net = diameter(unit_disk, coord(rng), 1.0 + (trial % 3));
        break;
    }
    REQUIRE(interior_residual(net) < 1e-10);
    const double m = mass(net);
    for (int k = 0; k < 10; ++k) {
      const Vec2 x(coord(rng), coord(rng));
      CHECK(std::abs(mass_via_forces(net, x) - m) <= 1e-8 * (1.0 + m));
    }
  }
}

TEST_CASE("scaling the domain and network scales both mass computations") {
  const double lambda = 2.5;
  const Domain big = Domain::disk(lambda);
  GeodesicNetwork small = two_diameters(unit_disk, 0.3);
  GeodesicNetwork scaled = small;
  for (auto& j : scaled.junctions) j.position *= lambda;
  CHECK(mass(scaled) == doctest::Approx(lambda * mass(small)));
  CHECK(mass_via_forces(scaled, Vec2::Zero()) ==
        doctest::Approx(lambda * mass_via_forces(small, Vec2::Zero())));
  CHECK(interior_residual(scaled) == doctest::Approx(interior_residual(small)));
  CHECK(free_boundary_residual(scaled, big) ==
        doctest::Approx(free_boundary_residual(small, unit_disk)));
}

TEST_CASE("density bounds report") {
  const GeodesicNetwork two = two_diameters(unit_disk);
  const auto report = check_density_bounds(two, unit_disk, 4.0);
  CHECK(report.ok);
  CHECK_FALSE(report.approximate);
  bool saw_center = false, saw_boundary = false;
  for (const auto& e : report.entries) {
    if (e.point.norm() < 1e-9) {
      CHECK(e.density == doctest::Approx(2.0));
      CHECK(e.bound == doctest::Approx(2.0));
      saw_center = true;
    }
    if (e.on_boundary) {
      CHECK(e.density == doctest::Approx(0.5));
      CHECK(e.bound == doctest::Approx(4.0 / (2.0 * std::sqrt(2.0))));
      saw_boundary = true;
    }
  }
  CHECK(saw_center);
  CHECK(saw_boundary);

  CHECK(check_density_bounds(diameter(unit_disk, 0.0), unit_disk, 2.0).ok);
  CHECK(check_density_bounds(diameter(unit_disk, 0.0, 2.0), unit_disk, 4.0).ok);
  CHECK_THROWS_AS(check_density_bounds(diameter(unit_disk, 0, 2.0), unit_disk,
                                       3.0),
                  InvalidParameter);
}

TEST_CASE("integrality filter") {
  const auto tri = integrality_filter(tripod(unit_disk));
  CHECK_FALSE(tri.pass);
  REQUIRE(tri.witnesses.size() == 1);
  CHECK(tri.witnesses[0].density == doctest::Approx(1.5));

  CHECK(integrality_filter(two_diameters(unit_disk)).pass);
  CHECK(integrality_filter(diameter(unit_disk, 0.0)).pass);

  // crossing of two diameters through a listed interior junction
  GeodesicNetwork crossing;
  crossing.junctions = {on_boundary(unit_disk, 0.0),
                        {Vec2(0, 0), JunctionLocation::Interior, 0.0},
                        on_boundary(unit_disk, M_PI),
                        on_boundary(unit_disk, M_PI / 2),
                        on_boundary(unit_disk, 3 * M_PI / 2)};
  crossing.segments = {{0, 1, 1.0}, {1, 2, 1.0}, {3, 1, 1.0}, {1, 4, 1.0}};
  CHECK(integrality_filter(crossing).pass);
}

TEST_CASE("network validation") {
  GeodesicNetwork bad;
  bad.junctions = {on_boundary(unit_disk, 0.0)};
  bad.segments = {{0, 1, 1.0}};
  CHECK_THROWS_AS(bad.validate(), InvalidParameter);

  GeodesicNetwork dup = diameter(unit_disk, 0.0);
  dup.segments.push_back({1, 0, 1.0});
  CHECK_THROWS_AS(dup.validate(), InvalidParameter);

  GeodesicNetwork generalized = diameter(unit_disk, 0.0, 1.4142135623);
  CHECK_FALSE(generalized.is_integral());
  CHECK(diameter(unit_disk, 0.0, 2.0).is_integral());
}
