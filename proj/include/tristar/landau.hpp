#ifndef TRISTAR_LANDAU_HPP
#define TRISTAR_LANDAU_HPP

#include "tristar/linalg.hpp"

#include <array>
#include <cmath>
#include <string>
#include <type_traits>

namespace tristar {

/// Coefficients of the fourth-order Landau expansion in the three symmetry
/// strain coordinates (e1 hydrostatic, e2/e3 deviatoric pair):
///
///   psi(e1,e2,e3) = A1/2 e1^2 + A/2 (T - Tc)(e2^2 + e3^2)
///                 + B/3 (e2^3 - 3 e2 e3^2) + C/4 (e2^2 + e3^2)^2 + M,
///
/// with M chosen so the three degenerate minima sit at energy zero.
/// A three-minimum landscape requires C > 0, B < 0 and T below the
/// superheating temperature T0 (see upper_transition_temperature).
///
/// The hydrostatic modulus A1 does not affect well positions; the default 1
/// is an arbitrary normalization.
struct LandauParams {
  double A1 = 1.0;
  double A = 1.0;
  double B = -30.0;
  double C = 200.0;
  double T = 0.8;
  double Tc = 1.0;
};

/// Deviatoric magnitude of the energy minima:
/// eps = (-B + sqrt(B^2 - 4 C A (T - Tc))) / (2 C).
/// Throws std::domain_error when the discriminant is negative or C == 0.
double transformation_strain(const LandauParams& p);

/// Superheating temperature T0 = Tc + 2 B^2 / (9 A C) above which the
/// minima disappear.  Throws std::domain_error when A*C == 0.
double upper_transition_temperature(const LandauParams& p);

/// Constant M that lifts the three minima exactly to energy zero.
double energy_offset(const LandauParams& p);

double landau_energy(double e1, double e2, double e3, const LandauParams& p);

/// Throws std::invalid_argument unless the parameters give a three-minimum
/// landscape (C > 0, B < 0, T < T0).
void validate(const LandauParams& p);

/// Key/value text format: one "key = value" per line, '#' comments.
/// Recognized keys: A1, A, B, C, T, Tc.  Unknown keys are rejected.
LandauParams load_landau_params(const std::string& path);

/// The three symmetric energy-minimizing strains, scaled by eps:
///   E1 = eps [[ 1, 0], [0, -1]]
///   E2 = eps [[-1/2,  s/2], [ s/2, 1/2]]     (s = sqrt(3))
///   E3 = eps [[-1/2, -s/2], [-s/2, 1/2]]
template <class T>
std::array<Mat2<T>, 3> strain_wells(const T& eps);

/// Linearized strain coordinates of a displacement gradient H:
///   e1 = (H00 + H11)/2,  e2 = (H00 - H11)/2,  e3 = (H01 + H10)/2.
template <class T>
std::array<T, 3> linear_strains(const Mat2<T>& h) {
  T half = T(1) / T(2);
  return {half * (h.a00 + h.a11), half * (h.a00 - h.a11), half * (h.a01 + h.a10)};
}

/// Finite-strain coordinates built from F = I + H (Lagrangian measure
/// C = F^T F re-expressed in the symmetry basis):
///   e1 = (F00^2 + F10^2 + F01^2 + F11^2 - 2)/4
///   e2 = (F00^2 + F10^2 - F01^2 - F11^2)/4
///   e3 = (F00 F01 + F10 F11)/2.
template <class T>
std::array<T, 3> nonlinear_strains(const Mat2<T>& h) {
  Mat2<T> f = Mat2<T>::identity() + h;
  T q = T(1) / T(4);
  T c0 = f.a00 * f.a00 + f.a10 * f.a10;
  T c1 = f.a01 * f.a01 + f.a11 * f.a11;
  return {q * (c0 + c1 - T(2)), q * (c0 - c1),
          (T(1) / T(2)) * (f.a00 * f.a01 + f.a10 * f.a11)};
}

/// Frobenius-orthogonal split M = deviatoric + spherical + skew.
template <class T>
struct MatrixParts {
  Mat2<T> deviatoric, spherical, skew;
};

template <class T>
MatrixParts<T> decompose(const Mat2<T>& m) {
  T half = T(1) / T(2);
  T mean = half * m.trace();
  Mat2<T> sph{mean, T(0), T(0), mean};
  Mat2<T> sk = skew_part(m);
  return {m - sph - sk, sph, sk};
}

template <class T>
std::array<Mat2<T>, 3> strain_wells(const T& eps) {
  T half = T(1) / T(2);
  T s;
  if constexpr (std::is_same_v<T, QSqrt3>)
    s = QSqrt3::sqrt3();
  else
    s = std::sqrt(T(3));
  T hs = half * s;
  Mat2<T> e1{T(1), T(0), T(0), T(-1)};
  Mat2<T> e2{-half, hs, hs, half};
  Mat2<T> e3{-half, -hs, -hs, half};
  return {eps * e1, eps * e2, eps * e3};
}

}  // namespace tristar

#endif
