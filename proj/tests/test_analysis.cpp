#include "doctest.h"

#include "tristar/analysis.hpp"

#include <cmath>

using namespace tristar;

TEST_CASE("phase fractions split the disk in thirds") {
  DisplacementField field(Tiling{}, Rational(1));
  PhaseFractionReport report = phase_fractions(field, 6);
  CHECK(report.tail_included);
  CHECK(report.disk_area == doctest::Approx(3.9081944666274127).epsilon(1e-14));
  for (double area : report.areas) {
    CHECK(std::abs(area - report.expected()) <= 1e-9);
    CHECK(area == doctest::Approx(1.3027314888758044).epsilon(1e-12));
  }
  CHECK(std::abs(report.areas[0] - report.areas[1]) <= 1e-12);
  CHECK(std::abs(report.areas[1] - report.areas[2]) <= 1e-12);

  // Insensitive to the cut-off (the exact kite tail absorbs the rest).
  PhaseFractionReport deep = phase_fractions(field, 20);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(deep.areas[i] - report.areas[i]) <= 1e-12);
}

TEST_CASE("first two generations cover 99.9% of the disk") {
  Tiling tiling;
  double ratio = area_ratio_generation01(tiling);
  CHECK(ratio == doctest::Approx(0.9988577418220437).epsilon(1e-12));
  CHECK(std::llround(ratio * 1000.0) == 999);
}

TEST_CASE("Lp norms of the skew field") {
  DisplacementField field(Tiling{}, Rational(1));
  const double frozen[] = {5.385216785842668, 9.358557996097801, 16.329688463204661,
                           28.771826411000036};
  for (int p = 1; p <= 4; ++p) {
    LpNorm norm = skew_lp_norm(field, p, 40);
    CHECK(norm.partial == doctest::Approx(frozen[p - 1]).epsilon(1e-12));
    CHECK(norm.tail_bound >= 0);
    CHECK(norm.tail_bound <= 1e-12 * norm.partial);

    // Cauchy: the increment beyond a shorter partial sum is controlled by
    // the shorter sum's own tail bound.
    LpNorm shorter = skew_lp_norm(field, p, 35);
    CHECK(norm.partial >= shorter.partial);
    CHECK(norm.partial - shorter.partial <= shorter.tail_bound);
  }

  CHECK_THROWS_AS(skew_lp_norm(field, 0.5, 10), std::invalid_argument);
  // kmax so small the tail ratio (1 + 1/(k+1))^p t^4 reaches 1: no bound.
  CHECK_THROWS(skew_lp_norm(field, 8.0, 0));
}

TEST_CASE("skew growth is linear in the generation") {
  DisplacementField field(Tiling{}, Rational(1));
  GrowthReport report = skew_growth(field, 10);
  REQUIRE(report.star_skew.size() == 11);
  REQUIRE(report.filler_skew.size() == 11);
  const double s3 = std::sqrt(3.0);
  for (int k = 0; k <= 10; ++k) {
    CHECK(report.star_skew[k] == doctest::Approx(2.0 * s3 * k).epsilon(1e-13));
    CHECK(report.filler_skew[k] ==
          doctest::Approx(s3 * std::abs(2.0 * k - 1.0)).epsilon(1e-13));
    CHECK(report.shell_max[k] ==
          doctest::Approx(std::max(report.star_skew[k], report.filler_skew[k]))
              .epsilon(1e-15));
  }
  CHECK(std::abs(report.slope - 2.0 * s3) <= 1e-9);
  CHECK(report.c1 == doctest::Approx(s3).epsilon(1e-13));
  CHECK(report.c2 == doctest::Approx(2.0 * s3).epsilon(1e-13));
  CHECK(report.bounds_hold);

  // eps scales the whole report linearly.
  DisplacementField half(Tiling{}, Rational(1, 2));
  GrowthReport hreport = skew_growth(half, 10);
  CHECK(hreport.slope == doctest::Approx(s3).epsilon(1e-12));
  CHECK(hreport.star_skew[4] == doctest::Approx(4.0 * s3).epsilon(1e-13));
}

TEST_CASE("maximum displacement magnitude") {
  DisplacementField field(Tiling{}, Rational(1));
  double m = max_displacement(field);
  CHECK(m == doctest::Approx(1.6796925924245538).epsilon(1e-12));
  // sqrt((5 + 2 sqrt(3))/3) in closed form.
  double closed = std::sqrt(QSqrt3(Rational(5, 3), Rational(2, 3)).to_double());
  CHECK(m == doctest::Approx(closed).epsilon(1e-14));

  DisplacementField half(Tiling{}, Rational(1, 2));
  CHECK(max_displacement(half) == doctest::Approx(m / 2).epsilon(1e-12));
}

TEST_CASE("shell extrema bound the sampled field") {
  DisplacementField field(Tiling{}, Rational(1));
  for (int gen : {0, 1, 3}) {
    ShellExtrema ext = shell_extrema(field, gen);
    CHECK(ext.gen == gen);
    CHECK(ext.sup.x >= ext.inf.x);
    CHECK(ext.sup.y >= ext.inf.y);
    // Every region corner value lies inside the box.
    for (Family f : kFamilies) {
      for (const QVec& c : field.tiling().region_corners({f, gen})) {
        DVec u = to_double(field.evaluate(c));
        CHECK(u.x <= ext.sup.x + 1e-12);
        CHECK(u.x >= ext.inf.x - 1e-12);
        CHECK(u.y <= ext.sup.y + 1e-12);
        CHECK(u.y >= ext.inf.y - 1e-12);
      }
    }
  }

  // Away from the clipped regions the extrema are exactly the corner sweep.
  ShellExtrema ext = shell_extrema(field, 2);
  double best_x = -1e300;
  for (Family f : kFamilies)
    for (const QVec& c : field.tiling().region_corners({f, 2}))
      best_x = std::max(best_x, to_double(field.evaluate(c)).x);
  CHECK(ext.sup.x == doctest::Approx(best_x).epsilon(1e-13));
}

TEST_CASE("kite midpoint marker") {
  Tiling tiling;
  KiteMidpointMarker marker = kite_midpoint_marker(tiling, 2);
  CHECK(marker.region == RegionId{Family::B, 3});
  // Midpoint of B2 and B3, interior to the filler kite whose long diagonal
  // they span.
  QVec expect = QSqrt3(Rational(1, 2)) *
                (tiling.vertex(Family::B, 2) + tiling.vertex(Family::B, 3));
  CHECK(marker.point == expect);
  CHECK(marker.point == pow(QSqrt3(2, -1), 4) *
                            QVec{QSqrt3(-3, Rational(5, 3)), QSqrt3(3, Rational(-5, 3))});
  CHECK(tiling.region_contains(marker.point, marker.region));
  CHECK(marker.distance == doctest::Approx(0.0008255775162264935).epsilon(1e-14));

  // At L = 70 (a 0.07 um arm written in nanometers) generation 2 lives at
  // a few hundredths of a nanometer.
  Tiling nm({Rational(70)});
  KiteMidpointMarker physical = kite_midpoint_marker(nm, 2);
  CHECK(physical.distance > 0.01);
  CHECK(physical.distance < 0.1);
  CHECK(physical.distance == doctest::Approx(70 * marker.distance).epsilon(1e-13));
}
