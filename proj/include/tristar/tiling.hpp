#ifndef TRISTAR_TILING_HPP
#define TRISTAR_TILING_HPP

#include "tristar/linalg.hpp"

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tristar {

/// The six region families of one generation of the tiling.  A carries the
/// upward-pointing arm of the star, E and F its two rotated copies; B, C, D
/// are the filler regions between consecutive arms.
enum class Family : int { A, B, C, D, E, F };

constexpr std::array<Family, 6> kFamilies{Family::A, Family::B, Family::C,
                                          Family::D, Family::E, Family::F};

char family_letter(Family f);

/// One tile: family plus generation index k >= 0.  Generation k is the
/// generation-0 geometry contracted by t^(2k), t = 2 - sqrt(3).
struct RegionId {
  Family family{};
  int gen = 0;

  friend bool operator==(const RegionId&, const RegionId&) = default;
  /// Lexicographic by family letter, then generation.
  friend bool operator<(const RegionId& l, const RegionId& r) {
    return l.family != r.family ? l.family < r.family : l.gen < r.gen;
  }
  std::string str() const;
};

/// The twelve straight interface families.  The first six join two regions
/// of the same generation; the -x kinds join generation k to k+1.
enum class InterfaceKind : int { BA, CA, CF, DF, ED, EB, BAx, ACx, FCx, DFx, DEx, BEx };

constexpr std::array<InterfaceKind, 12> kInterfaceKinds{
    InterfaceKind::BA,  InterfaceKind::CA,  InterfaceKind::CF,  InterfaceKind::DF,
    InterfaceKind::ED,  InterfaceKind::EB,  InterfaceKind::BAx, InterfaceKind::ACx,
    InterfaceKind::FCx, InterfaceKind::DFx, InterfaceKind::DEx, InterfaceKind::BEx};

const char* interface_kind_name(InterfaceKind k);

struct InterfaceId {
  InterfaceKind kind{};
  int gen = 0;

  friend bool operator==(const InterfaceId&, const InterfaceId&) = default;
  std::string str() const;
};

/// Closed interface segment together with its supporting line written as
/// dot(normal, p) == offset.  The normal is an exact unit vector chosen with
/// normal.y > 0 (or normal.x > 0 on vertical lines); `upper` is the adjacent
/// region on the side the normal points into, `lower` the other one.
struct Segment {
  InterfaceId id;
  QVec p0, p1;
  QVec normal;
  QSqrt3 offset;
  RegionId lower, upper;

  QSqrt3 side(const QVec& p) const { return dot(normal, p) - offset; }
};

struct TilingParams {
  Rational L = 1;  // length unit; the inscribed star has arm length L
};

/// Exact classification of a point in the closed disk.
struct Located {
  enum class Kind { Region, Interface, Origin, Outside };
  Kind kind{};
  RegionId region{};        // valid for Kind::Region
  InterfaceId interface{};  // valid for Kind::Interface
};

/// Self-similar partition of the open disk of radius R, R^2 = (2/3 + 1/sqrt(3)) L^2,
/// into six kite families per generation plus three disk-clipped generation-0
/// regions.  All vertex coordinates, interface lines and kite areas live in
/// Q(sqrt(3)) and are handled exactly.
class Tiling {
 public:
  explicit Tiling(TilingParams params = {});

  const Rational& L() const { return params_.L; }

  /// Contraction ratio t = 2 - sqrt(3) = tan(pi/12) raised to `k`, memoized.
  const QSqrt3& t_pow(int k) const;

  /// R^2, exactly (R itself is not in the field).
  const QSqrt3& disk_radius_sq() const { return radius_sq_; }

  /// Corner vertex of family `f` at generation `gen`: t^(2 gen) times the
  /// generation-0 vertex.
  QVec vertex(Family f, int gen) const;

  Segment interface(InterfaceId id) const;

  /// Exact open-set membership: strict inequalities on every bounding line
  /// and on the disk, so interface points belong to no region.
  bool region_contains(const QVec& p, RegionId id) const;

  /// Exact point classification.  Points of the boundary circle that are not
  /// interface endpoints classify to the adjacent clipped region, so that
  /// evaluation by continuity on the closed disk always has an owning piece.
  /// When p lies on several segments (a tile corner), the interface reported
  /// is the first in generation-then-kind order.
  Located locate(const QVec& p) const;

  /// Exact kite area L^2 t^(4k+1) (A/E/F) or L^2 t^(4k-1) (B/C/D, k >= 1);
  /// nullopt for the three disk-clipped generation-0 regions.
  std::optional<QSqrt3> kite_area(RegionId id) const;

  /// Area of any region as a double.  Kites convert their exact area; the
  /// clipped generation-0 regions are measured by circle/polygon clipping
  /// (two chords plus one circular segment), accurate to ~1 ulp * area.
  double region_area(RegionId id) const;

  /// Corners in counter-clockwise order.  Kites have four.  The clipped
  /// regions return [inner corner, arc start, arc end]; their boundary runs
  /// inner -> arc start -> (counter-clockwise arc) -> arc end -> inner.
  std::vector<QVec> region_corners(RegionId id) const;

  /// Partial tiled area through generation `kmax` plus the exact geometric
  /// tail of the remaining kites, compared against the disk area.
  struct AreaCheck {
    int kmax = 0;
    double kite_partial = 0;  // kites with generation <= kmax
    double clipped = 0;       // the three clipped generation-0 regions
    double tail = 0;          // exact kite tail, generations > kmax
    double total = 0;
    double disk = 0;  // pi R^2
    double defect = 0;  // disk - total
  };
  AreaCheck area_check(int kmax) const;

  /// Exact sum of every kite area over all generations, 3 t /(1 - t^2) L^2;
  /// simplifies to sqrt(3)/2 L^2.
  QSqrt3 kite_area_total() const;

 private:
  TilingParams params_;
  QSqrt3 scale_;      // L as a field element
  QSqrt3 radius_sq_;  // R^2
  mutable std::vector<QSqrt3> t_pows_;
  std::array<QVec, 6> base_;  // generation-0 vertices, including the L factor

  struct Constraint {
    InterfaceKind kind;
    int dgen;    // interface generation = region generation + dgen
    bool upper;  // required side of the supporting line
  };
  std::span<const Constraint> constraints(RegionId id) const;
  bool on_segment(const QVec& p, const Segment& s) const;
};

/// Area of the intersection of a convex polygon (counter-clockwise) with the
/// disk of radius `radius` centered at the origin.  Edge by edge: chord
/// pieces contribute triangles against the center, pieces outside the disk
/// contribute circular sectors.
double disk_polygon_area(double radius, std::span<const DVec> polygon);

}  // namespace tristar

#endif
