#include "doctest.h"

#include "tristar/qsqrt3.hpp"

#include <cmath>

using namespace tristar;

namespace {
const QSqrt3 kT(2, -1);  // contraction ratio t = 2 - sqrt(3)
}

TEST_CASE("field identities of the contraction ratio") {
  CHECK(kT * QSqrt3(2, 1) == QSqrt3(1));
  CHECK(QSqrt3(1) / kT == QSqrt3(2, 1));
  CHECK(kT * kT == QSqrt3(7, -4));
  CHECK(pow(kT, 4) == QSqrt3(97, -56));
  CHECK(pow(kT, 0) == QSqrt3(1));
  CHECK(kT.field_norm() == 1);
  CHECK(kT.conjugate() == QSqrt3(2, 1));
  CHECK((QSqrt3::sqrt3() * QSqrt3::sqrt3()) == QSqrt3(3));
}

TEST_CASE("exact sign with opposite-sign coefficients") {
  CHECK(QSqrt3(7, -4).sign() == 1);    // 49 > 48
  CHECK(QSqrt3(5, -3).sign() == -1);   // 25 < 27
  CHECK(QSqrt3(-5, 3).sign() == 1);
  CHECK(QSqrt3(-7, 4).sign() == -1);
  CHECK(QSqrt3(0).sign() == 0);
  CHECK(QSqrt3(0, -2).sign() == -1);
  CHECK(QSqrt3(3).sign() == 1);
  CHECK(kT > QSqrt3(0));
  CHECK(kT < QSqrt3(0, Rational(1, 3)));  // 2 - sqrt(3) < sqrt(3)/3
  CHECK(kT.abs() == kT);
  CHECK((-kT).abs() == kT);
}

TEST_CASE("exact square roots") {
  CHECK(QSqrt3::sqrt(QSqrt3(7, -4)) == kT);
  CHECK(QSqrt3::sqrt(QSqrt3(7, 4)) == QSqrt3(2, 1));
  CHECK(QSqrt3::sqrt(QSqrt3(3)) == QSqrt3(0, 1));
  CHECK(QSqrt3::sqrt(QSqrt3(4)) == QSqrt3(2));
  CHECK(QSqrt3::sqrt(QSqrt3(0)) == QSqrt3(0));
  CHECK(QSqrt3::sqrt(QSqrt3(Rational(27, 4))) == QSqrt3(0, Rational(3, 2)));
  CHECK(!QSqrt3::sqrt(QSqrt3(2)).has_value());
  CHECK(!QSqrt3::sqrt(QSqrt3(-1)).has_value());
  CHECK(!QSqrt3::sqrt(QSqrt3(1, 1)).has_value());

  CHECK(rational_sqrt(Rational(49, 4)) == Rational(7, 2));
  CHECK(rational_sqrt(Rational(0)) == Rational(0));
  CHECK(!rational_sqrt(Rational(2)).has_value());
  CHECK(!rational_sqrt(Rational(-4)).has_value());
}

TEST_CASE("division") {
  QSqrt3 q = QSqrt3(1, 2) / QSqrt3(5, -1);
  CHECK(q * QSqrt3(5, -1) == QSqrt3(1, 2));
  CHECK_THROWS_AS(QSqrt3(1) / QSqrt3(0), std::domain_error);
}

TEST_CASE("parsing scalar literals") {
  CHECK(parse_qsqrt3("2-r3") == kT);
  CHECK(parse_qsqrt3("2 - r3") == kT);
  CHECK(parse_qsqrt3("-r3/2") == QSqrt3(0, Rational(-1, 2)));
  CHECK(parse_qsqrt3("3r3/2") == QSqrt3(0, Rational(3, 2)));
  CHECK(parse_qsqrt3("1/2r3") == QSqrt3(0, Rational(1, 2)));
  CHECK(parse_qsqrt3("2r3") == QSqrt3(0, 2));
  CHECK(parse_qsqrt3("r3") == QSqrt3(0, 1));
  CHECK(parse_qsqrt3("0.25") == QSqrt3(Rational(1, 4)));
  CHECK(parse_qsqrt3("-5/3") == QSqrt3(Rational(-5, 3)));
  CHECK(parse_qsqrt3("1/2+1/3r3") == QSqrt3(Rational(1, 2), Rational(1, 3)));
  CHECK(parse_qsqrt3("-1+r3") == QSqrt3(-1, 1));
  CHECK(parse_rational("0.156") == Rational(156, 1000));
  CHECK(parse_rational("7/100") == Rational(7, 100));

  CHECK_THROWS_AS(parse_qsqrt3(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_qsqrt3("r5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_qsqrt3("1r3/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
}

TEST_CASE("printing") {
  CHECK(kT.str() == "2 - sqrt(3)");
  CHECK(QSqrt3(0, Rational(-1, 6)).str() == "-1/6*sqrt(3)");
  CHECK(QSqrt3(Rational(1, 2), Rational(1, 3)).str() == "1/2 + 1/3*sqrt(3)");
  CHECK(QSqrt3(5).str() == "5");
  CHECK(QSqrt3(0, 1).str() == "sqrt(3)");
  CHECK(QSqrt3(0, -1).str() == "-sqrt(3)");
  CHECK(QSqrt3(Rational(-3, 4)).str() == "-3/4");
}

TEST_CASE("double conversion survives coefficient blow-up") {
  const double t = 2.0 - std::sqrt(3.0);
  CHECK(kT.to_double() == doctest::Approx(0.2679491924311227).epsilon(1e-15));

  // Powers of t have coefficients growing like (2+sqrt(3))^k while the value
  // shrinks; a naive a + b*sqrt(3) in doubles loses every digit past ~k=20.
  for (unsigned k : {10u, 20u, 35u, 52u}) {
    double exactish = pow(kT, k).to_double();
    double ref = std::pow(t, static_cast<int>(k));
    CHECK(exactish == doctest::Approx(ref).epsilon(1e-12));
  }
  CHECK(pow(kT, 52) * pow(QSqrt3(2, 1), 52) == QSqrt3(1));

  // Small mixed-sign values behave too.
  CHECK(QSqrt3(-1, 1).to_double() ==
        doctest::Approx(std::sqrt(3.0) - 1.0).epsilon(1e-15));
  CHECK(QSqrt3(2).to_double() == 2.0);
  CHECK(QSqrt3(0, Rational(1, 2)).to_double() ==
        doctest::Approx(0.8660254037844386).epsilon(1e-15));
}
