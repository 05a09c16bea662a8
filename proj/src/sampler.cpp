#include "tristar/sampler.hpp"

#include "tristar/landau.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <utility>

namespace tristar {

namespace {

// Constraint tables in index form: interface kind, generation delta, side.
struct ConstraintRow {
  int kind, dgen;
  bool upper;
};

constexpr ConstraintRow kA[] = {{0, 0, false}, {1, 0, false}, {6, 0, true}, {7, 0, true}};
constexpr ConstraintRow kB0[] = {{0, 0, true}, {5, 0, true}};
constexpr ConstraintRow kB[] = {{0, 0, true}, {5, 0, true}, {6, -1, false}, {11, -1, true}};
constexpr ConstraintRow kC0[] = {{2, 0, true}, {1, 0, true}};
constexpr ConstraintRow kC[] = {{2, 0, true}, {1, 0, true}, {7, -1, false}, {8, -1, true}};
constexpr ConstraintRow kD0[] = {{4, 0, false}, {3, 0, false}};
constexpr ConstraintRow kD[] = {{4, 0, false}, {3, 0, false}, {10, -1, true}, {9, -1, true}};
constexpr ConstraintRow kE[] = {{4, 0, true}, {5, 0, false}, {11, 0, false}, {10, 0, false}};
constexpr ConstraintRow kF[] = {{2, 0, false}, {3, 0, true}, {8, 0, false}, {9, 0, false}};

std::pair<const ConstraintRow*, int> constraint_rows(Family f, int gen) {
  switch (f) {
    case Family::A: return {kA, 4};
    case Family::B: return gen == 0 ? std::pair{kB0, 2} : std::pair{kB, 4};
    case Family::C: return gen == 0 ? std::pair{kC0, 2} : std::pair{kC, 4};
    case Family::D: return gen == 0 ? std::pair{kD0, 2} : std::pair{kD, 4};
    case Family::E: return {kE, 4};
    case Family::F: return {kF, 4};
  }
  return {nullptr, 0};
}

// Families ordered by area share so the common case exits early.
constexpr Family kScanOrder[] = {Family::B, Family::C, Family::D,
                                 Family::A, Family::E, Family::F};

double unit_double(std::mt19937_64& rng) { return (rng() >> 11) * 0x1.0p-53; }

}  // namespace

FieldSampler::FieldSampler(const DisplacementField& field) : field_(field) {
  radius_sq_ = field.tiling().disk_radius_sq().to_double();
  radius_ = std::sqrt(radius_sq_);
  length_ = field.tiling().L().convert_to<double>();
  log_t_ = std::log(2.0 - std::sqrt(3.0));
  origin_u_ = to_double(field.origin_value());
  gen_cache(4);
}

const FieldSampler::GenCache& FieldSampler::gen_cache(int gen) const {
  while (static_cast<int>(cache_.size()) <= gen) {
    int g = static_cast<int>(cache_.size());
    GenCache entry;
    for (int i = 0; i < 12; ++i) {
      Segment s = field_.tiling().interface({static_cast<InterfaceKind>(i), g});
      entry.lines[i] = {s.normal.x.to_double(), s.normal.y.to_double(), s.offset.to_double()};
    }
    for (int f = 0; f < 6; ++f) {
      AffinePiece p = field_.piece({static_cast<Family>(f), g});
      DMat m = to_double(p.gradient);
      DVec o = to_double(p.offset);
      entry.pieces[f] = {m.a00, m.a01, m.a10, m.a11, o.x, o.y};
    }
    cache_.push_back(entry);
  }
  return cache_[gen];
}

bool FieldSampler::region_contains(const DVec& p, double r2, Family f, int gen,
                                   bool strict) const {
  if (strict ? r2 >= radius_sq_ : r2 > radius_sq_) return false;
  auto [rows, count] = constraint_rows(f, gen);
  for (int i = 0; i < count; ++i) {
    const Line& line = gen_cache(gen + rows[i].dgen).lines[rows[i].kind];
    double side = line.nx * p.x + line.ny * p.y - line.c;
    if (rows[i].upper ? (strict ? side <= 0 : side < 0) : (strict ? side >= 0 : side > 0))
      return false;
  }
  return true;
}

FieldSampler::Sample FieldSampler::sample(double x, double y) const {
  Sample out;
  DVec p{x, y};
  double r2 = x * x + y * y;
  if (r2 > radius_sq_) return out;
  out.inside = true;

  double m = std::max(std::abs(x), std::abs(y));
  if (m < 1e-13 * length_) {
    // Indistinguishable from the origin at double precision; the limit value
    // is within rounding of the field here.
    out.u = origin_u_;
    return out;
  }
  static const double kTop = 0.5 + 1.0 / std::sqrt(3.0);
  double ratio = m / (kTop * length_);
  int bracket = 0;
  if (ratio < 1.0) bracket = static_cast<int>(std::floor(std::log(ratio) / (2.0 * log_t_)));
  int klo = std::max(0, bracket - 2);
  int khi = bracket + 2;

  Family owner{};
  int owner_gen = -1;
  bool on_line = false;
  for (int k = klo; k <= khi && owner_gen < 0; ++k)
    for (Family f : kScanOrder)
      if (region_contains(p, r2, f, k, true)) {
        owner = f;
        owner_gen = k;
        break;
      }
  if (owner_gen < 0) {
    on_line = true;  // boundary of some region: take any closure that owns it
    for (int k = klo; k <= khi && owner_gen < 0; ++k)
      for (Family f : kScanOrder)
        if (region_contains(p, r2, f, k, false)) {
          owner = f;
          owner_gen = k;
          break;
        }
  }
  if (owner_gen < 0) return out;  // numerically unclassifiable sliver

  const Piece& piece = gen_cache(owner_gen).pieces[static_cast<int>(owner)];
  out.u = {piece.g00 * x + piece.g01 * y + piece.ox, piece.g10 * x + piece.g11 * y + piece.oy};
  out.well = on_line ? 0 : well_index(owner);
  DMat g{piece.g00, piece.g01, piece.g10, piece.g11};
  auto lin = linear_strains(g);
  out.eps = {lin[0], lin[1], lin[2]};
  auto fin = nonlinear_strains(g);
  out.e = {fin[0], fin[1], fin[2]};
  return out;
}

std::vector<GridRow> sample_grid(const FieldSampler& sampler, int n) {
  if (n < 2) throw std::invalid_argument("grid needs at least 2 points per side");
  std::vector<GridRow> rows;
  rows.reserve(static_cast<size_t>(n) * n);
  double r = sampler.radius();
  for (int iy = 0; iy < n; ++iy) {
    double y = -r + 2.0 * r * iy / (n - 1);
    for (int ix = 0; ix < n; ++ix) {
      double x = -r + 2.0 * r * ix / (n - 1);
      FieldSampler::Sample s = sampler.sample(x, y);
      GridRow row;
      row.x = x;
      row.y = y;
      if (s.inside) {
        row.u1 = s.u.x;
        row.u2 = s.u.y;
        row.well = s.well;
        row.eps1 = s.eps[0];
        row.eps2 = s.eps[1];
        row.eps3 = s.eps[2];
      }
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<ProfileRow> sample_profile(const FieldSampler& sampler, DVec from, DVec to,
                                       int samples) {
  if (samples < 2) throw std::invalid_argument("profile needs at least 2 samples");
  double r2 = sampler.radius() * sampler.radius();
  if (from.x * from.x + from.y * from.y > r2 || to.x * to.x + to.y * to.y > r2)
    throw std::invalid_argument("profile endpoints must lie in the closed disk");
  std::vector<ProfileRow> rows;
  rows.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    double s = static_cast<double>(i) / (samples - 1);
    double x = from.x + s * (to.x - from.x);
    double y = from.y + s * (to.y - from.y);
    FieldSampler::Sample smp = sampler.sample(x, y);
    rows.push_back({s, x, y, smp.eps[1], smp.eps[2], smp.eps[0], smp.e[0], smp.e[1], smp.e[2]});
  }
  return rows;
}

std::vector<ProfileRow> sample_profile(const DisplacementField& field, const QVec& from,
                                       const QVec& to, int samples) {
  if (samples < 2) throw std::invalid_argument("profile needs at least 2 samples");
  const Tiling& tiling = field.tiling();
  const QSqrt3& r2 = tiling.disk_radius_sq();
  if ((norm_sq(from) - r2).sign() > 0 || (norm_sq(to) - r2).sign() > 0)
    throw std::invalid_argument("profile endpoints must lie in the closed disk");
  std::vector<ProfileRow> rows;
  rows.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    Rational s(i, samples - 1);
    QSqrt3 sq(s);
    QVec p = from + sq * (to - from);
    Located loc = tiling.locate(p);
    ProfileRow row;
    row.s = s.convert_to<double>();
    row.x = p.x.to_double();
    row.y = p.y.to_double();
    RegionId owner;
    bool have_owner = false;
    if (loc.kind == Located::Kind::Region) {
      owner = loc.region;
      have_owner = true;
    } else if (loc.kind == Located::Kind::Interface) {
      Segment seg = tiling.interface(loc.interface);
      owner = std::min(seg.lower, seg.upper);
      have_owner = true;
    }
    if (have_owner) {
      QMat g = field.gradient(owner);
      auto lin = linear_strains(g);
      auto fin = nonlinear_strains(g);
      row.eps1 = lin[0].to_double();
      row.eps2 = lin[1].to_double();
      row.eps3 = lin[2].to_double();
      row.e1 = fin[0].to_double();
      row.e2 = fin[1].to_double();
      row.e3 = fin[2].to_double();
    }
    rows.push_back(row);
  }
  return rows;
}

MonteCarloFractions monte_carlo_fractions(const FieldSampler& sampler, long long samples,
                                          std::uint64_t seed) {
  if (samples <= 0) throw std::invalid_argument("sample count must be positive");
  MonteCarloFractions out;
  out.disk_area = std::numbers::pi * sampler.radius() * sampler.radius();
  std::mt19937_64 rng(seed);
  double r = sampler.radius();
  while (out.samples < samples) {
    double x = (2.0 * unit_double(rng) - 1.0) * r;
    double y = (2.0 * unit_double(rng) - 1.0) * r;
    if (x * x + y * y >= r * r) continue;
    FieldSampler::Sample s = sampler.sample(x, y);
    if (!s.inside) continue;
    ++out.samples;
    if (s.well >= 1)
      ++out.counts[s.well - 1];
    else
      ++out.interface_hits;
  }
  return out;
}

}  // namespace tristar
