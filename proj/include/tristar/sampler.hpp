#ifndef TRISTAR_SAMPLER_HPP
#define TRISTAR_SAMPLER_HPP

#include "tristar/displacement.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace tristar {

/// Double-precision view of the field for bulk sampling.  Region pieces and
/// interface lines are converted once per generation and cached; points are
/// classified by strict float predicates, so a sample landing exactly on a
/// stored line reports well 0 (its displacement still evaluates through an
/// adjacent piece by continuity).  Not thread-safe: the generation cache
/// grows lazily.
class FieldSampler {
 public:
  explicit FieldSampler(const DisplacementField& field);

  struct Sample {
    bool inside = false;
    int well = 0;  // variant 1..3; 0 when outside, on an interface, or at the origin
    DVec u{};
    std::array<double, 3> eps{};  // linear strain coordinates of the owning piece
    std::array<double, 3> e{};    // finite-strain coordinates of the same gradient
  };

  Sample sample(double x, double y) const;

  double radius() const { return radius_; }
  const DisplacementField& field() const { return field_; }

 private:
  struct Line {
    double nx, ny, c;
  };
  struct Piece {
    double g00, g01, g10, g11, ox, oy;
  };
  struct GenCache {
    std::array<Line, 12> lines;
    std::array<Piece, 6> pieces;
  };

  const GenCache& gen_cache(int gen) const;
  bool region_contains(const DVec& p, double r2, Family f, int gen, bool strict) const;

  const DisplacementField& field_;
  double radius_, radius_sq_, length_, log_t_;
  DVec origin_u_;
  mutable std::vector<GenCache> cache_;
};

struct GridRow {
  double x = 0, y = 0, u1 = 0, u2 = 0;
  int well = 0;
  double eps1 = 0, eps2 = 0, eps3 = 0;
};

/// n x n grid over the bounding square [-R, R]^2, y-major ascending, both
/// boundaries included.  Rows outside the closed disk are masked: well 0 and
/// zero field columns.
std::vector<GridRow> sample_grid(const FieldSampler& sampler, int n);

struct ProfileRow {
  double s = 0, x = 0, y = 0;
  double eps2 = 0, eps3 = 0, eps1 = 0;  // linearized strains
  double e1 = 0, e2 = 0, e3 = 0;        // finite strains of the same gradient
};

/// `samples` evenly spaced points on the segment from -> to (endpoints
/// included), float classification.  Throws std::invalid_argument when an
/// endpoint is outside the closed disk or samples < 2.
std::vector<ProfileRow> sample_profile(const FieldSampler& sampler, DVec from, DVec to,
                                       int samples);

/// Exact-classification variant: the segment is interpolated in exact
/// arithmetic and every point located exactly; strain columns come from the
/// owning piece (interface points use the lexicographically smaller side,
/// the origin reports zero strains).
std::vector<ProfileRow> sample_profile(const DisplacementField& field, const QVec& from,
                                       const QVec& to, int samples);

struct MonteCarloFractions {
  long long samples = 0;  // accepted in-disk points
  std::array<long long, 3> counts{};
  long long interface_hits = 0;
  double disk_area = 0;

  std::array<double, 3> areas() const {
    double scale = samples > 0 ? disk_area / static_cast<double>(samples) : 0.0;
    return {counts[0] * scale, counts[1] * scale, counts[2] * scale};
  }
};

/// Uniform rejection sampling over the disk driven by a seeded mt19937_64
/// stream; deterministic across runs for equal (samples, seed).
MonteCarloFractions monte_carlo_fractions(const FieldSampler& sampler, long long samples,
                                          std::uint64_t seed);

}  // namespace tristar

#endif
