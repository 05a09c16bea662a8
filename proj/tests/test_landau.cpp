#include "doctest.h"

#include "tristar/landau.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

using namespace tristar;

TEST_CASE("default parameters reproduce the known landscape") {
  LandauParams p;
  validate(p);

  double eps = transformation_strain(p);
  CHECK(eps == doctest::Approx(0.15639410298049852).epsilon(1e-15));
  CHECK(upper_transition_temperature(p) == 2.0);  // 1 + 2*900/(9*200), exact in doubles
  CHECK(energy_offset(p) == doctest::Approx(0.010786109322458024).epsilon(1e-13));

  // The three minima sit at (e2, e3) = eps*(1,0), eps*(-1/2, +-sqrt(3)/2).
  double s = std::sqrt(3.0) / 2.0;
  CHECK(std::abs(landau_energy(0.0, eps, 0.0, p)) <= 1e-14);
  CHECK(std::abs(landau_energy(0.0, -eps / 2, s * eps, p)) <= 1e-14);
  CHECK(std::abs(landau_energy(0.0, -eps / 2, -s * eps, p)) <= 1e-14);

  // Undeformed state costs exactly the offset; hydrostatic strain adds A1/2 e1^2.
  CHECK(landau_energy(0.0, 0.0, 0.0, p) == energy_offset(p));
  CHECK(landau_energy(0.2, 0.0, 0.0, p) ==
        doctest::Approx(energy_offset(p) + 0.5 * 0.04).epsilon(1e-15));

  // Three-fold symmetry in the deviatoric plane.
  double c = -0.5, t = std::sqrt(3.0) / 2.0;  // rotation by 120 degrees
  double e2 = 0.11, e3 = -0.047;
  CHECK(landau_energy(0.0, e2, e3, p) ==
        doctest::Approx(landau_energy(0.0, c * e2 - t * e3, t * e2 + c * e3, p))
            .epsilon(1e-12));
}

TEST_CASE("parameter validation") {
  LandauParams p;
  p.B = 30.0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p = {};
  p.C = 0.0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p = {};
  p.C = -5.0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p = {};
  p.T = 2.0;  // exactly the superheating temperature: minima vanish
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p.T = 1.99;
  CHECK_NOTHROW(validate(p));

  p = {};
  p.T = 2.2;  // discriminant 900 - 4*200*1.2 < 0
  CHECK_THROWS_AS(transformation_strain(p), std::domain_error);
  p = {};
  p.C = 0.0;
  CHECK_THROWS_AS(transformation_strain(p), std::domain_error);
  p.A = 0.0;
  CHECK_THROWS_AS(upper_transition_temperature(p), std::domain_error);
}

TEST_CASE("strain wells") {
  auto wells = strain_wells<QSqrt3>(QSqrt3(1));
  CHECK(wells[0] == QMat{QSqrt3(1), QSqrt3(0), QSqrt3(0), QSqrt3(-1)});
  CHECK(wells[1] == QMat{QSqrt3(Rational(-1, 2)), QSqrt3(0, Rational(1, 2)),
                         QSqrt3(0, Rational(1, 2)), QSqrt3(Rational(1, 2))});
  CHECK(wells[2] == QMat{QSqrt3(Rational(-1, 2)), QSqrt3(0, Rational(-1, 2)),
                         QSqrt3(0, Rational(-1, 2)), QSqrt3(Rational(1, 2))});
  CHECK(wells[0] + wells[1] + wells[2] == QMat{});
  for (const QMat& w : wells) {
    CHECK(w.trace() == QSqrt3(0));
    CHECK(w.det() == QSqrt3(-1));
    CHECK(w == w.transpose());
  }
  auto scaled = strain_wells<QSqrt3>(QSqrt3(Rational(3, 20)));
  CHECK(scaled[1] == QSqrt3(Rational(3, 20)) * wells[1]);

  auto dwells = strain_wells<double>(0.25);
  CHECK(dwells[2].a01 == doctest::Approx(-0.25 * std::sqrt(3.0) / 2).epsilon(1e-15));
}

TEST_CASE("strain coordinates of a gradient") {
  // The generation-0 filler gradient eps*[[1,-sqrt(3)],[sqrt(3),-1]].
  const QSqrt3 eps(Rational(1, 10));
  QMat h{eps, QSqrt3(0, -1) * eps, QSqrt3(0, 1) * eps, -eps};

  auto lin = linear_strains(h);
  CHECK(lin[0] == QSqrt3(0));
  CHECK(lin[1] == eps);
  CHECK(lin[2] == QSqrt3(0));

  // Finite-strain coordinates of the same gradient pick up the rotation:
  // e1 = 2 eps^2, e2 = eps, e3 = -sqrt(3) eps^2.
  auto fin = nonlinear_strains(h);
  CHECK(fin[0] == QSqrt3(Rational(1, 50)));
  CHECK(fin[1] == eps);
  CHECK(fin[2] == QSqrt3(0, Rational(-1, 100)));

  // Without the skew part the same well strain gives e1 = eps^2/2.
  QMat sym = sym_part(h);
  CHECK(nonlinear_strains(sym)[0] == QSqrt3(Rational(1, 200)));

  // Identity-gradient sanity: H = 0 has all strains zero.
  auto zero = nonlinear_strains(QMat{});
  CHECK(zero[0] == QSqrt3(0));
  CHECK(zero[2] == QSqrt3(0));
}

TEST_CASE("orthogonal decomposition") {
  QMat m{QSqrt3(3), QSqrt3(1, 1), QSqrt3(-2), QSqrt3(5, -1)};
  auto parts = decompose(m);
  CHECK(parts.deviatoric + parts.spherical + parts.skew == m);
  CHECK(parts.deviatoric.trace() == QSqrt3(0));
  CHECK(parts.deviatoric == parts.deviatoric.transpose());
  CHECK(parts.skew.a00 == QSqrt3(0));
  CHECK(parts.skew.a01 == -parts.skew.a10);
  CHECK(frobenius(parts.deviatoric, parts.skew) == QSqrt3(0));
  CHECK(frobenius(parts.deviatoric, parts.spherical) == QSqrt3(0));
  CHECK(frobenius(parts.spherical, parts.skew) == QSqrt3(0));
}

TEST_CASE("parameter files") {
  const char* path = "landau_test_params.txt";
  {
    std::ofstream out(path);
    out << "# overrides for one run\n"
        << "B = -24\n"
        << "C = 150\n"
        << "T = 0.9\n"
        << "\n"
        << "Tc = 1.0\n";
  }
  LandauParams p = load_landau_params(path);
  CHECK(p.B == -24.0);
  CHECK(p.C == 150.0);
  CHECK(p.T == 0.9);
  CHECK(p.Tc == 1.0);
  CHECK(p.A1 == 1.0);  // untouched default
  std::remove(path);

  {
    std::ofstream out(path);
    out << "D = 1\n";
  }
  CHECK_THROWS_AS(load_landau_params(path), std::invalid_argument);
  {
    std::ofstream out(path);
    out << "B world\n";
  }
  CHECK_THROWS_AS(load_landau_params(path), std::invalid_argument);
  {
    std::ofstream out(path);
    out << "B = zero\n";
  }
  CHECK_THROWS_AS(load_landau_params(path), std::invalid_argument);
  std::remove(path);
  CHECK_THROWS_AS(load_landau_params("no_such_file.txt"), std::invalid_argument);
}
