#include "tristar/qsqrt3.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace tristar {

QSqrt3& QSqrt3::operator/=(const QSqrt3& o) {
  if (o.is_zero()) throw std::domain_error("QSqrt3: division by zero");
  // Multiply by the conjugate; the denominator c^2 - 3 d^2 is a nonzero
  // rational because sqrt(3) is irrational.
  Rational denom = o.field_norm();
  Rational a = (a_ * o.a_ - 3 * b_ * o.b_) / denom;
  Rational b = (b_ * o.a_ - a_ * o.b_) / denom;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

int QSqrt3::sign() const {
  int sa = a_.sign();
  int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: a + b*sqrt(3) has the sign of whichever of |a|, |b|sqrt(3)
  // dominates, i.e. the sign of a^2 - 3 b^2 times sign(a).
  int cmp = Rational(a_ * a_ - 3 * b_ * b_).sign();
  return cmp == 0 ? 0 : cmp * sa;
}

double QSqrt3::to_double() const {
  static const double s3 = std::sqrt(3.0);
  double a = a_.convert_to<double>();
  double b = b_.convert_to<double>();
  if (a_.sign() * b_.sign() >= 0) return a + b * s3;
  // Opposite signs cancel catastrophically once the coefficients outgrow the
  // value (powers of 2 - sqrt(3) do this from roughly the 20th power on).
  // The conjugate a - b*sqrt(3) has same-signed terms, so divide the exact
  // field norm by it instead.
  Rational norm = a_ * a_ - 3 * b_ * b_;
  return norm.convert_to<double>() / (a - b * s3);
}

QSqrt3 pow(QSqrt3 base, unsigned exponent) {
  QSqrt3 acc(1);
  while (exponent != 0) {
    if (exponent & 1u) acc *= base;
    base *= base;
    exponent >>= 1;
  }
  return acc;
}

std::optional<Rational> rational_sqrt(const Rational& v) {
  if (v.sign() < 0) return std::nullopt;
  if (v.is_zero()) return Rational(0);
  const BigInt num = numerator(v);
  const BigInt den = denominator(v);
  BigInt rn = boost::multiprecision::sqrt(num);
  BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

std::optional<QSqrt3> QSqrt3::sqrt(const QSqrt3& v) {
  int s = v.sign();
  if (s < 0) return std::nullopt;
  if (s == 0) return QSqrt3(0);
  // Look for c + d*sqrt(3) with c^2 + 3 d^2 = a and 2 c d = b.  Then c^2 and
  // 3 d^2 are the roots of z^2 - a z + 3 (b/2)^2, which are rational iff
  // a^2 - 3 b^2 is a rational square.
  const Rational& a = v.rational_part();
  const Rational& b = v.radical_part();
  if (b.is_zero()) {
    if (auto c = rational_sqrt(a)) return QSqrt3(*c);
    if (auto d = rational_sqrt(a / 3)) return QSqrt3(0, *d);
    return std::nullopt;
  }
  auto disc = rational_sqrt(a * a - 3 * b * b);
  if (!disc) return std::nullopt;
  for (int branch : {1, -1}) {
    Rational z = (a + branch * *disc) / 2;  // candidate c^2
    auto c = rational_sqrt(z);
    if (!c || c->is_zero()) continue;
    Rational d = b / (2 * *c);
    QSqrt3 root(*c, d);
    if (root * root == v) return root.sign() > 0 ? root : -root;
  }
  return std::nullopt;
}

std::string QSqrt3::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const QSqrt3& v) {
  const Rational& a = v.rational_part();
  const Rational& b = v.radical_part();
  if (b.is_zero()) return os << a;
  if (a.is_zero()) {
    if (b == 1)
      os << "sqrt(3)";
    else if (b == -1)
      os << "-sqrt(3)";
    else
      os << b << "*sqrt(3)";
    return os;
  }
  os << a << (b.sign() > 0 ? " + " : " - ");
  Rational m = abs(b);
  if (m == 1)
    os << "sqrt(3)";
  else
    os << m << "*sqrt(3)";
  return os;
}

namespace {

// Signed decimal digit string to integer.  Not BigInt's string constructor:
// that one treats a leading 0 as an octal prefix.
BigInt parse_decimal_int(const std::string& s) {
  std::string body = s;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body.erase(0, 1);
  }
  if (body.empty()) throw std::invalid_argument("malformed integer literal: " + s);
  BigInt v = 0;
  for (char c : body) {
    if (c < '0' || c > '9')
      throw std::invalid_argument("malformed integer literal: " + s);
    v = v * 10 + (c - '0');
  }
  return negative ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt num = parse_decimal_int(s.substr(0, slash));
    BigInt den = parse_decimal_int(s.substr(slash + 1));
    if (den.is_zero()) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  }
  auto dot = s.find('.');
  if (dot == std::string::npos) return Rational(parse_decimal_int(s));
  std::string digits = s.substr(0, dot) + s.substr(dot + 1);
  size_t frac_len = s.size() - dot - 1;
  if (digits.empty() || digits == "-" || digits == "+")
    throw std::invalid_argument("malformed decimal");
  BigInt num = parse_decimal_int(digits);
  BigInt den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  return Rational(num, den);
}

namespace {

// One term of the grammar: either plain rational or a rational multiple of
// sqrt(3) written with an "r3" marker ("r3", "r3/2", "2r3", "1/2r3").
QSqrt3 parse_term(std::string s, bool negate) {
  auto pos = s.find("r3");
  QSqrt3 value;
  if (pos == std::string::npos) {
    value = QSqrt3(parse_rational(s));
  } else {
    std::string pre = s.substr(0, pos);
    std::string post = s.substr(pos + 2);
    Rational coef = pre.empty() ? Rational(1) : parse_rational(pre);
    if (!post.empty()) {
      if (post[0] != '/') throw std::invalid_argument("malformed radical term: " + s);
      Rational den = parse_rational(post.substr(1));
      if (den.is_zero()) throw std::invalid_argument("zero denominator");
      coef /= den;
    }
    value = QSqrt3(0, coef);
  }
  return negate ? -value : value;
}

}  // namespace

QSqrt3 parse_qsqrt3(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty scalar literal");

  // Split on the last top-level +/- that is not a leading sign.
  for (size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      bool neg_first = s[0] == '-';
      size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
      std::string first = s.substr(start, i - start);
      std::string second = s.substr(i + 1);
      if (first.empty() || second.empty())
        throw std::invalid_argument("malformed scalar literal: " + text);
      return parse_term(first, neg_first) + parse_term(second, s[i] == '-');
    }
  }
  bool neg = s[0] == '-';
  if (s[0] == '+' || s[0] == '-') s.erase(0, 1);
  return parse_term(s, neg);
}

}  // namespace tristar
