#ifndef TRISTAR_DISPLACEMENT_HPP
#define TRISTAR_DISPLACEMENT_HPP

#include "tristar/tiling.hpp"

namespace tristar {

/// One affine rule u(p) = gradient * p + offset.
struct AffinePiece {
  QMat gradient;
  QVec offset;

  QVec eval(const QVec& p) const { return gradient * p + offset; }
};

/// Infinitesimal rigid motion p -> spin * (y, -x) + shift, the gauge freedom
/// of the construction: adding one changes no symmetric strain anywhere.
struct RigidMotion {
  QSqrt3 spin;
  QVec shift;

  bool is_zero() const { return spin.is_zero() && shift.x.is_zero() && shift.y.is_zero(); }
};

/// Strain variant (1, 2 or 3) whose well the family's symmetric gradient
/// occupies: F,B -> 1; E,C -> 2; A,D -> 3.
int well_index(Family f);

/// Additive structure of one region's displacement gradient:
/// gradient = well + generation_skew + extra_skew + rigid_skew.
struct GradientDecomposition {
  QMat gradient;
  int well_index = 0;   // 1-based variant index
  QMat well;            // eps * E_i, the symmetric part
  QMat generation_skew; // eps * 2 k sqrt(3) * J, J = [[0,1],[-1,0]]
  QMat extra_skew;      // eps * (-sqrt(3)) * J on B/C/D, zero on A/E/F
  QMat rigid_skew;      // spin * J from the rigid motion, if any
};

/// Values of the field on both sides of an interface point plus the
/// independently coded closed-form expression for that interface; the three
/// must agree exactly (continuity).
struct InterfaceTrace {
  QVec point;
  QVec from_lower;
  QVec from_upper;
  QVec closed_form;
};

/// The piecewise-affine displacement over the tiling: one affine piece per
/// region, continuous across every interface and up to the boundary circle,
/// with an exactly known limit at the origin.  eps scales every value; the
/// gradient on each region is eps * (variant well + skew).
class DisplacementField {
 public:
  DisplacementField(Tiling tiling, Rational eps);

  const Tiling& tiling() const { return tiling_; }
  const QSqrt3& eps() const { return eps_; }
  const RigidMotion& rigid() const { return rigid_; }

  /// Same field plus a rigid motion; symmetric strains are unchanged.
  DisplacementField with_rigid_motion(RigidMotion z) const;

  /// The affine rule on one region, rigid motion included.  The cumulative
  /// inter-generation offset is evaluated in closed form.
  AffinePiece piece(RegionId id) const;

  QMat gradient(RegionId id) const { return piece(id).gradient; }

  GradientDecomposition decompose_gradient(RegionId id) const;

  /// Value anywhere in the closed disk.  Interface points evaluate through
  /// the lexicographically smaller adjacent region (sides agree by
  /// continuity); the origin returns origin_value().  Throws
  /// std::domain_error outside the closed disk.
  QVec evaluate(const QVec& p) const;

  /// Limit value at the origin: eps L (sqrt(3)-2, 1) / (1 - t^2) + shift.
  QVec origin_value() const;

  /// Closed-form value at vertex A_k, B_k or C_k (these three determine the
  /// star's convergence to the origin limit).  Throws std::invalid_argument
  /// for the other families; their corners evaluate through evaluate().
  QVec vertex_value(Family f, int gen) const;

  /// Evaluate both adjacent pieces and the independent printed expression at
  /// the point (1-s) p0 + s p1 of the interface, s in [0,1].
  InterfaceTrace interface_trace(InterfaceId id, const Rational& s) const;

 private:
  Tiling tiling_;
  QSqrt3 eps_;
  RigidMotion rigid_;

  QVec offset_sum(int gen) const;  // v_ok: cumulative offset, closed form
  QVec rigid_at(const QVec& p) const;
  QVec closed_form_value(InterfaceId id, const QVec& p) const;
};

}  // namespace tristar

#endif
