#include "tristar/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tristar {

namespace {

// Skew off-diagonal of the gradient on one region, exact.
QSqrt3 skew_entry(const DisplacementField& field, RegionId id) {
  GradientDecomposition d = field.decompose_gradient(id);
  return d.generation_skew.a01 + d.extra_skew.a01 + d.rigid_skew.a01;
}

struct ClippedArc {
  double a0, a1;  // arc range, a1 in [a0, a0 + 2 pi)
};

ClippedArc arc_range(const Tiling& tiling, RegionId id) {
  auto corners = tiling.region_corners(id);
  DVec s = to_double(corners[1]), e = to_double(corners[2]);
  double a0 = std::atan2(s.y, s.x);
  double a1 = std::atan2(e.y, e.x);
  if (a1 < a0) a1 += 2.0 * std::numbers::pi;
  return {a0, a1};
}

bool angle_in(double theta, const ClippedArc& arc) {
  while (theta < arc.a0) theta += 2.0 * std::numbers::pi;
  return theta <= arc.a1;
}

}  // namespace

PhaseFractionReport phase_fractions(const DisplacementField& field, int kmax) {
  if (kmax < 2) throw std::invalid_argument("phase fractions need kmax >= 2");
  const Tiling& tiling = field.tiling();
  PhaseFractionReport out;
  out.kmax = kmax;

  // Exact kite sums per variant.  Each variant owns one star family (A/E/F)
  // and one filler family (B/C/D), so the kite part is identical; the code
  // still accumulates per family as a structural check.
  std::array<QSqrt3, 3> kites{};
  for (Family f : kFamilies) {
    int variant = well_index(f) - 1;
    for (int k = 0; k <= kmax; ++k)
      if (auto a = tiling.kite_area({f, k})) kites[variant] += *a;
  }
  // Tails: sum_{k > kmax} t^(4k+1) = t^(4 kmax + 5) / (1 - t^4), and the
  // filler kites carry t^(4k-1).
  QSqrt3 l2 = QSqrt3(tiling.L()) * QSqrt3(tiling.L());
  QSqrt3 geom = QSqrt3(1) / (QSqrt3(1) - tiling.t_pow(4));
  QSqrt3 tail_star = l2 * tiling.t_pow(4 * kmax + 5) * geom;
  QSqrt3 tail_filler = l2 * tiling.t_pow(4 * kmax + 3) * geom;

  std::array<double, 3> clipped{};
  clipped[well_index(Family::B) - 1] = tiling.region_area({Family::B, 0});
  clipped[well_index(Family::C) - 1] = tiling.region_area({Family::C, 0});
  clipped[well_index(Family::D) - 1] = tiling.region_area({Family::D, 0});

  for (int v = 0; v < 3; ++v)
    out.areas[v] = (kites[v] + tail_star + tail_filler).to_double() + clipped[v];
  out.disk_area = std::numbers::pi * tiling.disk_radius_sq().to_double();
  return out;
}

double area_ratio_generation01(const Tiling& tiling) {
  double shell0 = 0;
  for (Family f : kFamilies) shell0 += tiling.region_area({f, 0});
  double fillers1 = 3.0 * tiling.region_area({Family::B, 1});
  double disk = std::numbers::pi * tiling.disk_radius_sq().to_double();
  return (shell0 + fillers1) / disk;
}

ShellExtrema shell_extrema(const DisplacementField& field, int gen) {
  if (gen < 0) throw std::invalid_argument("negative generation");
  const Tiling& tiling = field.tiling();
  ShellExtrema out;
  out.gen = gen;
  bool first = true;
  auto take = [&](int component, double v) {
    double& hi = component == 0 ? out.sup.x : out.sup.y;
    double& lo = component == 0 ? out.inf.x : out.inf.y;
    hi = std::max(hi, v);
    lo = std::min(lo, v);
  };

  double radius = std::sqrt(tiling.disk_radius_sq().to_double());
  for (Family f : kFamilies) {
    RegionId id{f, gen};
    AffinePiece piece = field.piece(id);
    auto corners = tiling.region_corners(id);
    for (const QVec& c : corners) {
      QVec u = piece.eval(c);
      DVec v = to_double(u);
      if (first) {
        out.sup = out.inf = v;
        first = false;
      } else {
        take(0, v.x);
        take(1, v.y);
      }
    }
    if (gen == 0 && corners.size() == 3) {
      // Clipped region: the affine extrema over the closure may sit in the
      // interior of the boundary arc, at the angle where the gradient row
      // is radial.
      ClippedArc arc = arc_range(tiling, id);
      DMat g = to_double(piece.gradient);
      DVec o = to_double(piece.offset);
      DVec rows[2] = {{g.a00, g.a01}, {g.a10, g.a11}};
      double offs[2] = {o.x, o.y};
      for (int i = 0; i < 2; ++i) {
        double mag = radius * std::hypot(rows[i].x, rows[i].y);
        if (angle_in(std::atan2(rows[i].y, rows[i].x), arc)) take(i, offs[i] + mag);
        if (angle_in(std::atan2(-rows[i].y, -rows[i].x), arc)) take(i, offs[i] - mag);
      }
    }
  }
  return out;
}

LpNorm skew_lp_norm(const DisplacementField& field, double p, int kmax) {
  if (p < 1.0) throw std::invalid_argument("Lp norms need p >= 1");
  if (kmax < 0) throw std::invalid_argument("negative generation bound");
  const Tiling& tiling = field.tiling();
  LpNorm out;
  out.p = p;
  out.kmax = kmax;

  for (int k = 0; k <= kmax; ++k)
    for (Family f : kFamilies) {
      RegionId id{f, k};
      double w = std::abs(skew_entry(field, id).to_double());
      double area = tiling.region_area(id);
      out.partial += std::pow(w, p) * area;
    }

  // Tail: |skew| <= c2 k on generation k (c2 includes any rigid spin), and
  // the generation-k area is 3 L^2 (t^(4k+1) + t^(4k-1)).  The series
  // sum_{k>K} k^p t^(4k) is bounded by its first term times a geometric
  // series with ratio r = (1 + 1/(K+1))^p t^4 < 1.
  double eps = field.eps().to_double();
  double c2 = 2.0 * std::sqrt(3.0) * std::abs(eps) + std::abs(field.rigid().spin.to_double());
  double t = tiling.t_pow(1).to_double();
  double length = tiling.L().convert_to<double>();
  double l2 = length * length;
  double K1 = kmax + 1;
  double ratio = std::pow(1.0 + 1.0 / K1, p) * std::pow(t, 4);
  if (ratio >= 1.0) throw std::domain_error("tail bound needs a larger kmax for this p");
  double first = std::pow(c2 * K1, p) * std::pow(t, 4 * K1);
  out.tail_bound = 3.0 * l2 * (t + 1.0 / t) * first / (1.0 - ratio);
  return out;
}

GrowthReport skew_growth(const DisplacementField& field, int kmax) {
  if (kmax < 1) throw std::invalid_argument("growth report needs kmax >= 1");
  GrowthReport out;
  out.kmax = kmax;
  double eps = field.eps().to_double();
  out.c1 = std::sqrt(3.0) * eps;
  out.c2 = 2.0 * std::sqrt(3.0) * eps;

  for (int k = 0; k <= kmax; ++k) {
    double star = std::abs(skew_entry(field, {Family::A, k}).to_double());
    double filler = std::abs(skew_entry(field, {Family::B, k}).to_double());
    out.star_skew.push_back(star);
    out.filler_skew.push_back(filler);
    out.shell_max.push_back(std::max(star, filler));
  }

  // Least-squares slope of shell_max against k over k >= 1 (the k = 0 shell
  // carries the filler skew -sqrt(3) eps and sits off the line).
  double n = 0, sk = 0, sv = 0, skk = 0, skv = 0;
  for (int k = 1; k <= kmax; ++k) {
    double v = out.shell_max[k];
    n += 1;
    sk += k;
    sv += v;
    skk += static_cast<double>(k) * k;
    skv += k * v;
  }
  out.slope = (n * skv - sk * sv) / (n * skk - sk * sk);

  out.bounds_hold = true;
  for (int k = 1; k <= kmax; ++k) {
    double v = out.shell_max[k];
    if (v < out.c1 * k - 1e-9 || v > out.c2 * k + 1e-9) out.bounds_hold = false;
  }
  return out;
}

double max_displacement(const DisplacementField& field) {
  const Tiling& tiling = field.tiling();
  // Values at generation k differ from the origin limit by O(k t^(2k));
  // beyond t^(2k) < 1e-18 the sweep cannot change the maximum.
  const int kstop = 16;
  double best = 0;
  for (int k = 0; k <= kstop; ++k)
    for (Family f : kFamilies) {
      AffinePiece piece = field.piece({f, k});
      for (const QVec& c : tiling.region_corners({f, k})) {
        DVec v = to_double(piece.eval(c));
        best = std::max(best, std::hypot(v.x, v.y));
      }
    }
  DVec o = to_double(field.origin_value());
  return std::max(best, std::hypot(o.x, o.y));
}

KiteMidpointMarker kite_midpoint_marker(const Tiling& tiling, int gen) {
  if (gen < 0) throw std::invalid_argument("negative generation");
  QSqrt3 scale = QSqrt3(tiling.L()) * tiling.t_pow(2 * gen);
  KiteMidpointMarker out;
  out.point = {scale * QSqrt3(-3, Rational(5, 3)), scale * QSqrt3(3, Rational(-5, 3))};
  Located loc = tiling.locate(out.point);
  if (loc.kind != Located::Kind::Region)
    throw std::logic_error("midpoint marker fell outside every open region");
  out.region = loc.region;
  DVec p = to_double(out.point);
  out.distance = std::hypot(p.x, p.y);
  return out;
}

}  // namespace tristar
