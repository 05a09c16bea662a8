#include "tristar/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace tristar {

namespace {

const Rational kHalf(1, 2);
const Rational kThird(1, 3);
const Rational kSixth(1, 6);

// Generation-0 vertices over the unit length L = 1.  A, E and F lie exactly
// on the boundary circle; B, C and D are interior.
const std::array<QVec, 6> kBaseVertices{{
    /* A */ {QSqrt3(0, kSixth), QSqrt3(kHalf, kThird)},
    /* B */ {QSqrt3(-kHalf, kSixth), QSqrt3(kHalf, Rational(-1, 6))},
    /* C */ {QSqrt3(0, kSixth), QSqrt3(-kHalf, kThird)},
    /* D */ {QSqrt3(kHalf, -kThird), QSqrt3(0, Rational(-1, 6))},
    /* E */ {QSqrt3(-kHalf, -kThird), QSqrt3(0, Rational(-1, 6))},
    /* F */ {QSqrt3(kHalf, kSixth), QSqrt3(-kHalf, Rational(-1, 6))},
}};

struct KindInfo {
  const char* name;
  Family end0, end1;
  int dg0, dg1;  // endpoint generations relative to the interface generation
  Family lower_family, upper_family;
  int dlower, dupper;
  Rational nx_a, nx_b, ny_a, ny_b;  // unit normal components a + b*sqrt(3)
};

// Unit normals point to the `upper` side and are canonicalized with
// normal.y > 0 (normal.x > 0 for vertical lines).
const std::array<KindInfo, 12> kKinds{{
    // name end0 end1 dg0 dg1 lower upper dl du    normal
    {"BA", Family::B, Family::A, 0, 0, Family::A, Family::B, 0, 0,
     Rational(0), Rational(-1, 2), Rational(1, 2), Rational(0)},
    {"CA", Family::C, Family::A, 0, 0, Family::A, Family::C, 0, 0,
     Rational(1), Rational(0), Rational(0), Rational(0)},
    {"CF", Family::C, Family::F, 0, 0, Family::F, Family::C, 0, 0,
     Rational(0), Rational(1, 2), Rational(1, 2), Rational(0)},
    {"DF", Family::D, Family::F, 0, 0, Family::D, Family::F, 0, 0,
     Rational(1, 2), Rational(0), Rational(0), Rational(1, 2)},
    {"ED", Family::E, Family::D, 0, 0, Family::D, Family::E, 0, 0,
     Rational(0), Rational(0), Rational(1), Rational(0)},
    {"EB", Family::E, Family::B, 0, 0, Family::E, Family::B, 0, 0,
     Rational(-1, 2), Rational(0), Rational(0), Rational(1, 2)},
    {"BA+", Family::B, Family::A, 0, 1, Family::B, Family::A, 1, 0,
     Rational(1, 2), Rational(0), Rational(0), Rational(1, 2)},
    {"AC+", Family::A, Family::C, 1, 0, Family::C, Family::A, 1, 0,
     Rational(0), Rational(0), Rational(1), Rational(0)},
    {"FC+", Family::F, Family::C, 1, 0, Family::F, Family::C, 0, 1,
     Rational(-1, 2), Rational(0), Rational(0), Rational(1, 2)},
    {"DF+", Family::D, Family::F, 0, 1, Family::F, Family::D, 0, 1,
     Rational(0), Rational(-1, 2), Rational(1, 2), Rational(0)},
    {"DE+", Family::D, Family::E, 0, 1, Family::E, Family::D, 0, 1,
     Rational(1), Rational(0), Rational(0), Rational(0)},
    {"BE+", Family::B, Family::E, 0, 1, Family::E, Family::B, 0, 1,
     Rational(0), Rational(1, 2), Rational(1, 2), Rational(0)},
}};

using Constraint = std::array<int, 3>;  // kind index, dgen, upper flag

// Open-set descriptions: each region is the intersection of the open disk
// with strict half-planes of its bounding interface lines.
constexpr std::array<Constraint, 4> kConstraintsA{{{0, 0, 0}, {1, 0, 0}, {6, 0, 1}, {7, 0, 1}}};
constexpr std::array<Constraint, 2> kConstraintsB0{{{0, 0, 1}, {5, 0, 1}}};
constexpr std::array<Constraint, 4> kConstraintsB{{{0, 0, 1}, {5, 0, 1}, {6, -1, 0}, {11, -1, 1}}};
constexpr std::array<Constraint, 2> kConstraintsC0{{{2, 0, 1}, {1, 0, 1}}};
constexpr std::array<Constraint, 4> kConstraintsC{{{2, 0, 1}, {1, 0, 1}, {7, -1, 0}, {8, -1, 1}}};
constexpr std::array<Constraint, 2> kConstraintsD0{{{4, 0, 0}, {3, 0, 0}}};
constexpr std::array<Constraint, 4> kConstraintsD{{{4, 0, 0}, {3, 0, 0}, {10, -1, 1}, {9, -1, 1}}};
constexpr std::array<Constraint, 4> kConstraintsE{{{4, 0, 1}, {5, 0, 0}, {11, 0, 0}, {10, 0, 0}}};
constexpr std::array<Constraint, 4> kConstraintsF{{{2, 0, 0}, {3, 0, 1}, {8, 0, 0}, {9, 0, 0}}};

int kind_index(InterfaceKind k) { return static_cast<int>(k); }

}  // namespace

char family_letter(Family f) { return static_cast<char>('A' + static_cast<int>(f)); }

std::string RegionId::str() const {
  return std::string(1, family_letter(family)) + std::to_string(gen);
}

const char* interface_kind_name(InterfaceKind k) { return kKinds[kind_index(k)].name; }

std::string InterfaceId::str() const {
  return std::string(interface_kind_name(kind)) + ":" + std::to_string(gen);
}

Tiling::Tiling(TilingParams params) : params_(std::move(params)) {
  if (params_.L.sign() <= 0) throw std::invalid_argument("tiling length must be positive");
  scale_ = QSqrt3(params_.L);
  // R^2 = (2/3 + sqrt(3)/3) L^2; the circle passes through A, E and F.
  radius_sq_ = QSqrt3(Rational(2, 3), kThird) * scale_ * scale_;
  t_pows_ = {QSqrt3(1), QSqrt3(2, -1)};
  for (int i = 0; i < 6; ++i) base_[i] = scale_ * kBaseVertices[i];
}

const QSqrt3& Tiling::t_pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power of the contraction ratio");
  while (static_cast<int>(t_pows_.size()) <= k) t_pows_.push_back(t_pows_.back() * t_pows_[1]);
  return t_pows_[k];
}

QVec Tiling::vertex(Family f, int gen) const {
  if (gen < 0) throw std::invalid_argument("negative generation");
  return t_pow(2 * gen) * base_[static_cast<int>(f)];
}

Segment Tiling::interface(InterfaceId id) const {
  if (id.gen < 0) throw std::invalid_argument("negative generation");
  const KindInfo& info = kKinds[kind_index(id.kind)];
  Segment s;
  s.id = id;
  s.p0 = vertex(info.end0, id.gen + info.dg0);
  s.p1 = vertex(info.end1, id.gen + info.dg1);
  s.normal = {QSqrt3(info.nx_a, info.nx_b), QSqrt3(info.ny_a, info.ny_b)};
  s.offset = dot(s.normal, s.p0);
  s.lower = {info.lower_family, id.gen + info.dlower};
  s.upper = {info.upper_family, id.gen + info.dupper};
  return s;
}

std::span<const Tiling::Constraint> Tiling::constraints(RegionId id) const {
  static const auto convert = [](const auto& raw) {
    std::vector<Constraint> out;
    for (const auto& c : raw)
      out.push_back({static_cast<InterfaceKind>(c[0]), c[1], c[2] != 0});
    return out;
  };
  static const std::vector<Constraint> a = convert(kConstraintsA);
  static const std::vector<Constraint> b0 = convert(kConstraintsB0);
  static const std::vector<Constraint> b = convert(kConstraintsB);
  static const std::vector<Constraint> c0 = convert(kConstraintsC0);
  static const std::vector<Constraint> c = convert(kConstraintsC);
  static const std::vector<Constraint> d0 = convert(kConstraintsD0);
  static const std::vector<Constraint> d = convert(kConstraintsD);
  static const std::vector<Constraint> e = convert(kConstraintsE);
  static const std::vector<Constraint> f = convert(kConstraintsF);
  switch (id.family) {
    case Family::A: return a;
    case Family::B: return id.gen == 0 ? std::span<const Constraint>(b0) : b;
    case Family::C: return id.gen == 0 ? std::span<const Constraint>(c0) : c;
    case Family::D: return id.gen == 0 ? std::span<const Constraint>(d0) : d;
    case Family::E: return e;
    case Family::F: return f;
  }
  throw std::logic_error("unreachable");
}

bool Tiling::region_contains(const QVec& p, RegionId id) const {
  if (id.gen < 0) throw std::invalid_argument("negative generation");
  if ((norm_sq(p) - radius_sq_).sign() >= 0) return false;
  for (const Constraint& c : constraints(id)) {
    Segment s = interface({c.kind, id.gen + c.dgen});
    int side = s.side(p).sign();
    if (c.upper ? side <= 0 : side >= 0) return false;
  }
  return true;
}

bool Tiling::on_segment(const QVec& p, const Segment& s) const {
  if (s.side(p).sign() != 0) return false;
  QVec d = s.p1 - s.p0;
  QSqrt3 along = dot(p - s.p0, d);
  return along.sign() >= 0 && (along - norm_sq(d)).sign() <= 0;
}

Located Tiling::locate(const QVec& p) const {
  if (p.x.is_zero() && p.y.is_zero()) return {Located::Kind::Origin, {}, {}};
  int disk_cmp = (norm_sq(p) - radius_sq_).sign();
  if (disk_cmp > 0) return {Located::Kind::Outside, {}, {}};

  // Bracket the candidate generations with float logs; the largest vertex
  // coordinate of generation k scales like t^(2k), so the true generation
  // lies within +-1 of the bracket.  The +-2 window also absorbs rounding.
  static const double kTop = 0.5 + 1.0 / std::sqrt(3.0);  // max |coordinate| / (L t^(2k))
  static const double kLogT = std::log(2.0 - std::sqrt(3.0));
  double m = std::max(std::abs(p.x.to_double()), std::abs(p.y.to_double()));
  double ratio = m / (kTop * params_.L.convert_to<double>());
  int bracket = 0;
  if (ratio < 1.0) bracket = static_cast<int>(std::floor(std::log(ratio) / (2.0 * kLogT)));
  int klo = std::max(0, bracket - 2);
  int khi = bracket + 2;

  for (int k = klo; k <= khi; ++k)
    for (InterfaceKind kind : kInterfaceKinds) {
      Segment s = interface({kind, k});
      if (on_segment(p, s)) return {Located::Kind::Interface, {}, {kind, k}};
    }
  for (int k = klo; k <= khi; ++k)
    for (Family f : kFamilies)
      if (region_contains(p, {f, k})) return {Located::Kind::Region, {f, k}, {}};

  if (disk_cmp == 0) {
    // On the boundary circle, strictly between interface endpoints: the
    // point belongs to the closure of exactly one clipped region.
    for (Family f : {Family::B, Family::C, Family::D}) {
      bool ok = true;
      for (const Constraint& c : constraints({f, 0})) {
        Segment s = interface({c.kind, c.dgen});
        int side = s.side(p).sign();
        if (c.upper ? side <= 0 : side >= 0) {
          ok = false;
          break;
        }
      }
      if (ok) return {Located::Kind::Region, {f, 0}, {}};
    }
  }
  throw std::logic_error("point in the closed disk escaped classification");
}

std::optional<QSqrt3> Tiling::kite_area(RegionId id) const {
  if (id.gen < 0) throw std::invalid_argument("negative generation");
  QSqrt3 l2 = scale_ * scale_;
  switch (id.family) {
    case Family::A:
    case Family::E:
    case Family::F:
      return l2 * t_pow(4 * id.gen + 1);
    default:
      if (id.gen == 0) return std::nullopt;
      return l2 * t_pow(4 * id.gen - 1);
  }
}

std::vector<QVec> Tiling::region_corners(RegionId id) const {
  if (id.gen < 0) throw std::invalid_argument("negative generation");
  const int k = id.gen;
  auto v = [&](Family f, int g) { return vertex(f, g); };
  switch (id.family) {
    case Family::A:
      return {v(Family::A, k), v(Family::B, k), v(Family::A, k + 1), v(Family::C, k)};
    case Family::E:
      return {v(Family::E, k), v(Family::D, k), v(Family::E, k + 1), v(Family::B, k)};
    case Family::F:
      return {v(Family::F, k), v(Family::C, k), v(Family::F, k + 1), v(Family::D, k)};
    case Family::B:
      if (k == 0) return {v(Family::B, 0), v(Family::A, 0), v(Family::E, 0)};
      return {v(Family::B, k), v(Family::A, k), v(Family::B, k - 1), v(Family::E, k)};
    case Family::C:
      if (k == 0) return {v(Family::C, 0), v(Family::F, 0), v(Family::A, 0)};
      return {v(Family::C, k), v(Family::F, k), v(Family::C, k - 1), v(Family::A, k)};
    case Family::D:
      if (k == 0) return {v(Family::D, 0), v(Family::E, 0), v(Family::F, 0)};
      return {v(Family::D, k), v(Family::E, k), v(Family::D, k - 1), v(Family::F, k)};
  }
  throw std::logic_error("unreachable");
}

double Tiling::region_area(RegionId id) const {
  if (auto exact = kite_area(id)) return exact->to_double();
  // Clipped generation-0 region: a wedge with apex strictly inside and both
  // far corners exactly on the circle.  Clip a covering quadrilateral whose
  // outer corner lies beyond the arc.
  auto corners = region_corners(id);
  DVec apex = to_double(corners[0]);
  DVec arc0 = to_double(corners[1]);
  DVec arc1 = to_double(corners[2]);
  double radius = std::sqrt(radius_sq_.to_double());
  double a0 = std::atan2(arc0.y, arc0.x);
  double a1 = std::atan2(arc1.y, arc1.x);
  if (a1 < a0) a1 += 2.0 * std::numbers::pi;
  double mid = 0.5 * (a0 + a1);
  DVec far{10.0 * radius * std::cos(mid), 10.0 * radius * std::sin(mid)};
  std::array<DVec, 4> quad{apex, arc0, far, arc1};
  return disk_polygon_area(radius, quad);
}

QSqrt3 Tiling::kite_area_total() const {
  QSqrt3 t = t_pow(1);
  QSqrt3 one(1);
  return scale_ * scale_ * QSqrt3(3) * t / (one - t * t);
}

Tiling::AreaCheck Tiling::area_check(int kmax) const {
  if (kmax < 0) throw std::invalid_argument("negative generation bound");
  AreaCheck out;
  out.kmax = kmax;
  QSqrt3 l2 = scale_ * scale_;
  QSqrt3 partial(0);
  for (int k = 0; k <= kmax; ++k) {
    partial += QSqrt3(3) * t_pow(4 * k + 1);
    if (k >= 1) partial += QSqrt3(3) * t_pow(4 * k - 1);
  }
  partial *= l2;
  // Exact geometric tail of the kites beyond kmax:
  // sum_{k > kmax} 3 (t^(4k+1) + t^(4k-1)) = 3 t^(4 kmax + 4) (t + 1/t) / (1 - t^4).
  QSqrt3 t = t_pow(1);
  QSqrt3 inv_t(2, 1);  // 1/t = 2 + sqrt(3)
  QSqrt3 tail = QSqrt3(3) * t_pow(4 * (kmax + 1)) * (t + inv_t) / (QSqrt3(1) - t_pow(4));
  tail *= l2;

  double clipped = 0;
  for (Family f : {Family::B, Family::C, Family::D}) clipped += region_area({f, 0});

  out.kite_partial = partial.to_double();
  out.tail = tail.to_double();
  out.clipped = clipped;
  out.total = out.kite_partial + out.tail + out.clipped;
  out.disk = std::numbers::pi * radius_sq_.to_double();
  out.defect = out.disk - out.total;
  return out;
}

namespace {

double sector_area(double radius, const DVec& a, const DVec& b) {
  double theta = std::atan2(cross(a, b), dot(a, b));
  return 0.5 * radius * radius * theta;
}

double edge_area(double radius, const DVec& p, const DVec& q) {
  const double r2 = radius * radius;
  const bool p_in = dot(p, p) <= r2;
  const bool q_in = dot(q, q) <= r2;
  if (p_in && q_in) return 0.5 * cross(p, q);

  DVec d = q - p;
  double dd = dot(d, d);
  if (dd == 0.0) return 0.0;
  double b = dot(p, d) / dd;
  double c = (dot(p, p) - r2) / dd;
  double disc = b * b - c;

  auto at = [&](double s) { return DVec{p.x + s * d.x, p.y + s * d.y}; };

  if (!p_in && !q_in) {
    if (disc <= 0.0) return sector_area(radius, p, q);
    double root = std::sqrt(disc);
    double s1 = -b - root, s2 = -b + root;
    if (s2 <= 0.0 || s1 >= 1.0) return sector_area(radius, p, q);
    s1 = std::max(s1, 0.0);
    s2 = std::min(s2, 1.0);
    DVec x1 = at(s1), x2 = at(s2);
    return sector_area(radius, p, x1) + 0.5 * cross(x1, x2) + sector_area(radius, x2, q);
  }
  double root = std::sqrt(std::max(disc, 0.0));
  if (p_in) {
    double s2 = std::clamp(-b + root, 0.0, 1.0);
    DVec x2 = at(s2);
    return 0.5 * cross(p, x2) + sector_area(radius, x2, q);
  }
  double s1 = std::clamp(-b - root, 0.0, 1.0);
  DVec x1 = at(s1);
  return sector_area(radius, p, x1) + 0.5 * cross(x1, q);
}

}  // namespace

double disk_polygon_area(double radius, std::span<const DVec> polygon) {
  double total = 0.0;
  for (size_t i = 0; i < polygon.size(); ++i)
    total += edge_area(radius, polygon[i], polygon[(i + 1) % polygon.size()]);
  return total;
}

}  // namespace tristar
