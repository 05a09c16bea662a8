#ifndef TRISTAR_LINALG_HPP
#define TRISTAR_LINALG_HPP

#include "tristar/qsqrt3.hpp"

namespace tristar {

template <class T>
struct Vec2 {
  T x{}, y{};

  Vec2 operator-() const { return {-x, -y}; }
  friend Vec2 operator+(const Vec2& l, const Vec2& r) { return {l.x + r.x, l.y + r.y}; }
  friend Vec2 operator-(const Vec2& l, const Vec2& r) { return {l.x - r.x, l.y - r.y}; }
  friend Vec2 operator*(const T& s, const Vec2& v) { return {s * v.x, s * v.y}; }
  friend bool operator==(const Vec2& l, const Vec2& r) { return l.x == r.x && l.y == r.y; }
  friend bool operator!=(const Vec2& l, const Vec2& r) { return !(l == r); }
};

template <class T>
T dot(const Vec2<T>& l, const Vec2<T>& r) {
  return l.x * r.x + l.y * r.y;
}

template <class T>
T cross(const Vec2<T>& l, const Vec2<T>& r) {
  return l.x * r.y - l.y * r.x;
}

template <class T>
T norm_sq(const Vec2<T>& v) {
  return dot(v, v);
}

/// 2x2 matrix in row-major order.
template <class T>
struct Mat2 {
  T a00{}, a01{}, a10{}, a11{};

  static Mat2 identity() { return {T(1), T(0), T(0), T(1)}; }

  Mat2 operator-() const { return {-a00, -a01, -a10, -a11}; }
  friend Mat2 operator+(const Mat2& l, const Mat2& r) {
    return {l.a00 + r.a00, l.a01 + r.a01, l.a10 + r.a10, l.a11 + r.a11};
  }
  friend Mat2 operator-(const Mat2& l, const Mat2& r) {
    return {l.a00 - r.a00, l.a01 - r.a01, l.a10 - r.a10, l.a11 - r.a11};
  }
  friend Mat2 operator*(const T& s, const Mat2& m) {
    return {s * m.a00, s * m.a01, s * m.a10, s * m.a11};
  }
  friend Vec2<T> operator*(const Mat2& m, const Vec2<T>& v) {
    return {m.a00 * v.x + m.a01 * v.y, m.a10 * v.x + m.a11 * v.y};
  }
  friend bool operator==(const Mat2& l, const Mat2& r) {
    return l.a00 == r.a00 && l.a01 == r.a01 && l.a10 == r.a10 && l.a11 == r.a11;
  }
  friend bool operator!=(const Mat2& l, const Mat2& r) { return !(l == r); }

  T det() const { return a00 * a11 - a01 * a10; }
  T trace() const { return a00 + a11; }
  Mat2 transpose() const { return {a00, a10, a01, a11}; }
};

template <class T>
Mat2<T> outer(const Vec2<T>& u, const Vec2<T>& v) {
  return {u.x * v.x, u.x * v.y, u.y * v.x, u.y * v.y};
}

template <class T>
Mat2<T> sym_part(const Mat2<T>& m) {
  T half = T(1) / T(2);
  return {m.a00, half * (m.a01 + m.a10), half * (m.a01 + m.a10), m.a11};
}

template <class T>
Mat2<T> skew_part(const Mat2<T>& m) {
  T half = T(1) / T(2);
  T w = half * (m.a01 - m.a10);
  return {T(0), w, -w, T(0)};
}

template <class T>
T frobenius(const Mat2<T>& l, const Mat2<T>& r) {
  return l.a00 * r.a00 + l.a01 * r.a01 + l.a10 * r.a10 + l.a11 * r.a11;
}

using QVec = Vec2<QSqrt3>;
using QMat = Mat2<QSqrt3>;
using DVec = Vec2<double>;
using DMat = Mat2<double>;

inline DVec to_double(const QVec& v) { return {v.x.to_double(), v.y.to_double()}; }
inline DMat to_double(const QMat& m) {
  return {m.a00.to_double(), m.a01.to_double(), m.a10.to_double(), m.a11.to_double()};
}

}  // namespace tristar

#endif
