#ifndef TRISTAR_ANALYSIS_HPP
#define TRISTAR_ANALYSIS_HPP

#include "tristar/displacement.hpp"

#include <array>
#include <vector>

namespace tristar {

/// Area occupied by each strain variant: kites summed in closed form through
/// `kmax` plus the exact geometric tail, plus the numerically clipped
/// generation-0 regions.  The three areas are equal and each is one third of
/// the disk.
struct PhaseFractionReport {
  int kmax = 0;
  std::array<double, 3> areas{};  // variant 1, 2, 3
  double disk_area = 0;
  bool tail_included = true;

  double expected() const { return disk_area / 3.0; }
};

PhaseFractionReport phase_fractions(const DisplacementField& field, int kmax);

/// (area of the generation-0 shell + the three generation-1 filler kites)
/// divided by the disk area; approximately 0.999, the sense in which the
/// first two generations already fill the domain.
double area_ratio_generation01(const Tiling& tiling);

/// Componentwise supremum and infimum of the displacement over the closed
/// generation-`gen` shell (the six regions of that generation).  Affine
/// pieces attain extrema at corners; the three clipped generation-0 regions
/// may also attain them on the boundary arc, which is scanned analytically.
/// Values are double: corner candidates are exact to rounding, arc extrema
/// involve R and are irrational.
struct ShellExtrema {
  int gen = 0;
  DVec sup, inf;
};

ShellExtrema shell_extrema(const DisplacementField& field, int gen);

/// Integral of |skew off-diagonal|^p over generations 0..kmax (exact
/// per-region products, clipped areas numeric) plus a rigorous geometric
/// bound on the remaining tail.
struct LpNorm {
  double p = 2;
  int kmax = 0;
  double partial = 0;
  double tail_bound = 0;
};

LpNorm skew_lp_norm(const DisplacementField& field, double p, int kmax);

/// Per-generation skew magnitudes: the star kites (A/E/F) carry exactly
/// 2 sqrt(3) eps k, the fillers (B/C/D) sqrt(3) eps (2k-1).  The linear
/// growth (slope fitted over k >= 1) is the quantitative form of the
/// field's unbounded gradient.
struct GrowthReport {
  int kmax = 0;
  std::vector<double> star_skew;    // |skew| on A/E/F at each generation
  std::vector<double> filler_skew;  // |skew| on B/C/D at each generation
  std::vector<double> shell_max;    // max of the two
  double slope = 0;                 // least-squares slope of shell_max vs k, k >= 1
  double c1 = 0, c2 = 0;            // c1*k <= shell_max(k) <= c2*k for k >= 1
  bool bounds_hold = false;
};

GrowthReport skew_growth(const DisplacementField& field, int kmax);

/// Largest |u| over the closure: sweep of all region corners up to the
/// generation where the shells have shrunk below double precision, plus the
/// origin value.
double max_displacement(const DisplacementField& field);

/// The marker point xi_k = L t^(2k) (5/sqrt(3) - 3, 3 - 5/sqrt(3)): the
/// midpoint of vertices B_k and B_(k+1), an interior point of the filler
/// kite joining them (region (B, k+1), whose diagonal they span).  Its
/// distance from the origin sets the physical length scale at which
/// generation k lives.
struct KiteMidpointMarker {
  QVec point;
  RegionId region;
  double distance = 0;
};

KiteMidpointMarker kite_midpoint_marker(const Tiling& tiling, int gen);

}  // namespace tristar

#endif
