#ifndef TRISTAR_QSQRT3_HPP
#define TRISTAR_QSQRT3_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <iosfwd>
#include <optional>
#include <string>

namespace tristar {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Element of the real quadratic field Q(sqrt(3)), stored as a + b*sqrt(3)
/// with arbitrary-precision rational coefficients.  All arithmetic and all
/// comparisons are exact; the only lossy operation is to_double().
///
/// The representation is unique (sqrt(3) is irrational), so operator== on the
/// coefficient pair is true value equality.
class QSqrt3 {
public:
  QSqrt3() = default;
  QSqrt3(int n) : a_(n) {}
  QSqrt3(long n) : a_(n) {}
  QSqrt3(const Rational& a) : a_(a) {}
  QSqrt3(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QSqrt3 sqrt3() { return QSqrt3(0, 1); }

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QSqrt3 operator-() const { return QSqrt3(-a_, -b_); }

  QSqrt3& operator+=(const QSqrt3& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QSqrt3& operator-=(const QSqrt3& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QSqrt3& operator*=(const QSqrt3& o) {
    // (a + b s)(c + d s) = ac + 3bd + (ad + bc) s   with s = sqrt(3)
    Rational a = a_ * o.a_ + 3 * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(a);
    b_ = std::move(b);
    return *this;
  }
  QSqrt3& operator/=(const QSqrt3& o);

  friend QSqrt3 operator+(QSqrt3 l, const QSqrt3& r) { return l += r; }
  friend QSqrt3 operator-(QSqrt3 l, const QSqrt3& r) { return l -= r; }
  friend QSqrt3 operator*(QSqrt3 l, const QSqrt3& r) { return l *= r; }
  friend QSqrt3 operator/(QSqrt3 l, const QSqrt3& r) { return l /= r; }

  friend bool operator==(const QSqrt3& l, const QSqrt3& r) {
    return l.a_ == r.a_ && l.b_ == r.b_;
  }
  friend bool operator!=(const QSqrt3& l, const QSqrt3& r) { return !(l == r); }
  friend bool operator<(const QSqrt3& l, const QSqrt3& r) {
    return (l - r).sign() < 0;
  }
  friend bool operator>(const QSqrt3& l, const QSqrt3& r) { return r < l; }
  friend bool operator<=(const QSqrt3& l, const QSqrt3& r) { return !(r < l); }
  friend bool operator>=(const QSqrt3& l, const QSqrt3& r) { return !(l < r); }

  /// Conjugate a - b*sqrt(3) (the nontrivial field automorphism).
  QSqrt3 conjugate() const { return QSqrt3(a_, -b_); }

  /// Field norm a^2 - 3 b^2; zero iff the value is zero.
  Rational field_norm() const { return a_ * a_ - 3 * b_ * b_; }

  /// Exact sign (-1, 0, +1).  Decided by case analysis on the coefficient
  /// signs; the mixed-sign case compares a^2 against 3 b^2.
  int sign() const;

  QSqrt3 abs() const { return sign() < 0 ? -*this : *this; }

  double to_double() const;

  /// Exact square root when it exists inside the field, nullopt otherwise.
  static std::optional<QSqrt3> sqrt(const QSqrt3& v);

  /// "a", "b*sqrt(3)" or "a + b*sqrt(3)" with rational coefficients.
  std::string str() const;

private:
  Rational a_, b_;
};

QSqrt3 pow(QSqrt3 base, unsigned exponent);

/// Exact rational square root, nullopt when the argument is not a perfect
/// square (or is negative).
std::optional<Rational> rational_sqrt(const Rational& v);

/// Parses "p", "p/q", decimal strings like "0.25" (exact), and simple
/// radical forms such as "r3", "-r3/2", "2r3", "1/2r3" (meaning (1/2)r3).
/// Composite "a+b" / "a-b" of two such terms is accepted, e.g. "2-r3".
QSqrt3 parse_qsqrt3(const std::string& text);

Rational parse_rational(const std::string& text);

std::ostream& operator<<(std::ostream& os, const QSqrt3& v);

}  // namespace tristar

#endif
