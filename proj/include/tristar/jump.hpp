#ifndef TRISTAR_JUMP_HPP
#define TRISTAR_JUMP_HPP

#include "tristar/displacement.hpp"

#include <string>
#include <vector>

namespace tristar {

/// One solution of the jump system H+ - H- = a (x) n.
struct JumpSolution {
  QVec amplitude;  // a, carries the eps scale
  QVec normal;     // exact unit vector, canonical sign (n.y > 0, or n.x > 0)
  QSqrt3 spin;     // w: the skew matrix accompanying the minus side is
                   // eps [[0, -w], [w, 0]]
};

/// det(h_plus - h_minus); zero iff the gradient jump has rank <= 1, the
/// necessary condition for a continuous displacement across a planar
/// interface with these two gradients.
QSqrt3 rank_one_defect(const QMat& h_plus, const QMat& h_minus);

/// Solves (e_plus + skew_plus) - e_minus - eps [[0,-w],[w,0]] = a (x) n for
/// the scalar spin w and amplitude a, with the unit normal n prescribed.
/// The two equations aligned with the larger |n| component fix a; the
/// remaining ones fix w and must then hold identically.  Throws
/// std::domain_error when they cannot, std::invalid_argument when |n| != 1
/// exactly or eps <= 0.
JumpSolution solve_jump(const QMat& e_plus, const QMat& skew_plus, const QMat& e_minus,
                        const QVec& n, const QSqrt3& eps);

/// Free-normal variant for a pair of symmetric wells: solves
/// det(e_plus - e_minus - eps [[0,-w],[w,0]]) = 0 for w (a quadratic), then
/// factors each root's jump into a (x) n.  Solutions are ordered by
/// decreasing normal.x^2; a double root yields one entry.  Throws
/// std::domain_error when no root exists in the field.
std::vector<JumpSolution> enumerate_jumps(const QMat& e_plus, const QMat& e_minus,
                                          const QSqrt3& eps);

/// Fault injection for negative testing: NegateSkewB0 flips the skew part of
/// the displacement gradient on region B0 before checking.
enum class Mutation { None, NegateSkewB0 };

enum class Backend { Exact, Float };

struct CompatCheck {
  InterfaceId id;
  bool det_ok = false;
  bool reconstruction_ok = false;
  QVec amplitude;        // a with jump = a (x) interface normal
  std::string residual;  // exact defect as text, or float residual magnitude

  bool ok() const { return det_ok && reconstruction_ok; }
};

struct CompatReport {
  int kmax = 0;
  Backend backend = Backend::Exact;
  std::vector<CompatCheck> checks;
  int failures = 0;
};

/// Checks every interface family for generations 0..kmax: the gradient jump
/// across the interface must be rank-one and equal a (x) n with n the stored
/// geometric normal.  Exact backend compares against zero; float backend
/// allows 1e-12 relative to the jump magnitude.
CompatReport verify_tiling(const DisplacementField& field, int kmax,
                           Mutation mutation = Mutation::None,
                           Backend backend = Backend::Exact);

}  // namespace tristar

#endif
