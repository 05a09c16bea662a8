#include "tristar/displacement.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace tristar {

namespace {

const Rational kHalf(1, 2);

QSqrt3 q(Rational a, Rational b = 0) { return QSqrt3(std::move(a), std::move(b)); }

QMat spin_matrix(const QSqrt3& w) { return {QSqrt3(0), w, -w, QSqrt3(0)}; }

}  // namespace

int well_index(Family f) {
  switch (f) {
    case Family::F:
    case Family::B:
      return 1;
    case Family::E:
    case Family::C:
      return 2;
    case Family::A:
    case Family::D:
      return 3;
  }
  throw std::logic_error("unreachable");
}

DisplacementField::DisplacementField(Tiling tiling, Rational eps) : tiling_(std::move(tiling)) {
  if (eps.sign() <= 0) throw std::invalid_argument("transformation strain must be positive");
  eps_ = QSqrt3(std::move(eps));
}

DisplacementField DisplacementField::with_rigid_motion(RigidMotion z) const {
  DisplacementField out(*this);
  out.rigid_.spin += z.spin;
  out.rigid_.shift = out.rigid_.shift + z.shift;
  return out;
}

QVec DisplacementField::offset_sum(int gen) const {
  // v_ok = L (sqrt(3)-2, 1) sum_{j=1}^{k} t^(2j-2); geometric closed form
  // (1 - t^(2k)) / (1 - t^2) with 1 - t^2 = 4 sqrt(3) - 6 exactly.
  QSqrt3 sum = (QSqrt3(1) - tiling_.t_pow(2 * gen)) / QSqrt3(-6, 4);
  QSqrt3 len = QSqrt3(tiling_.L()) * sum;
  return {QSqrt3(-2, 1) * len, len};
}

QVec DisplacementField::rigid_at(const QVec& p) const {
  return {rigid_.spin * p.y + rigid_.shift.x, -(rigid_.spin * p.x) + rigid_.shift.y};
}

AffinePiece DisplacementField::piece(RegionId id) const {
  if (id.gen < 0) throw std::invalid_argument("negative generation");
  const Rational k(id.gen);
  const QSqrt3 lt = QSqrt3(tiling_.L()) * tiling_.t_pow(2 * id.gen);  // L t^(2k)
  QMat g;
  QVec o;
  switch (id.family) {
    case Family::A:
      g = {q(-kHalf), q(0, 2 * k - kHalf), q(0, -2 * k - kHalf), q(kHalf)};
      o = {QSqrt3(0), lt};
      break;
    case Family::B:
      g = {q(1), q(0, 2 * k - 1), q(0, 1 - 2 * k), q(-1)};
      o = {q(kHalf) * lt, q(1, kHalf) * lt};
      break;
    case Family::C:
      g = {q(-kHalf), q(0, 2 * k - kHalf), q(0, Rational(3, 2) - 2 * k), q(kHalf)};
      o = {QSqrt3(0), QSqrt3(0)};
      break;
    case Family::D:
      g = {q(-kHalf), q(0, 2 * k - Rational(3, 2)), q(0, kHalf - 2 * k), q(kHalf)};
      o = {q(-kHalf, -kHalf) * lt, q(kHalf, kHalf) * lt};
      break;
    case Family::E:
      g = {q(-kHalf), q(0, 2 * k + kHalf), q(0, kHalf - 2 * k), q(kHalf)};
      o = {q(kHalf, -kHalf) * lt, q(kHalf, kHalf) * lt};
      break;
    case Family::F:
      g = {q(1), q(0, 2 * k), q(0, -2 * k), q(-1)};
      o = {q(-kHalf) * lt, q(0, kHalf) * lt};
      break;
  }
  AffinePiece piece{eps_ * g, eps_ * (o + offset_sum(id.gen))};
  if (!rigid_.is_zero()) {
    piece.gradient = piece.gradient + spin_matrix(rigid_.spin);
    piece.offset = piece.offset + rigid_.shift;
  }
  return piece;
}

GradientDecomposition DisplacementField::decompose_gradient(RegionId id) const {
  GradientDecomposition out;
  out.gradient = gradient(id);
  out.well_index = tristar::well_index(id.family);

  const QSqrt3 s3 = QSqrt3::sqrt3();
  QMat wells[3] = {
      {QSqrt3(1), QSqrt3(0), QSqrt3(0), QSqrt3(-1)},
      {q(-kHalf), q(0, kHalf), q(0, kHalf), q(kHalf)},
      {q(-kHalf), q(0, -kHalf), q(0, -kHalf), q(kHalf)},
  };
  out.well = eps_ * wells[out.well_index - 1];
  out.generation_skew = spin_matrix(eps_ * QSqrt3(2 * id.gen) * s3);
  switch (id.family) {
    case Family::B:
    case Family::C:
    case Family::D:
      out.extra_skew = spin_matrix(-(eps_ * s3));
      break;
    default:
      out.extra_skew = {};
      break;
  }
  out.rigid_skew = spin_matrix(rigid_.spin);
  return out;
}

QVec DisplacementField::evaluate(const QVec& p) const {
  Located loc = tiling_.locate(p);
  switch (loc.kind) {
    case Located::Kind::Outside:
      throw std::domain_error("point outside the closed disk");
    case Located::Kind::Origin:
      return origin_value();
    case Located::Kind::Region:
      return piece(loc.region).eval(p);
    case Located::Kind::Interface: {
      Segment s = tiling_.interface(loc.interface);
      return piece(std::min(s.lower, s.upper)).eval(p);
    }
  }
  throw std::logic_error("unreachable");
}

QVec DisplacementField::origin_value() const {
  QSqrt3 len = eps_ * QSqrt3(tiling_.L()) / QSqrt3(-6, 4);  // eps L / (1 - t^2)
  return {QSqrt3(-2, 1) * len + rigid_.shift.x, len + rigid_.shift.y};
}

QVec DisplacementField::vertex_value(Family f, int gen) const {
  if (gen < 0) throw std::invalid_argument("negative generation");
  const Rational k(gen);
  QSqrt3 c1, c2;
  switch (f) {
    case Family::A:
      c1 = q(2 * k - kHalf, k - Rational(1, 3));
      c2 = q(1 - k, Rational(1, 6));
      break;
    case Family::B:
      c1 = q(kHalf - k, k - Rational(1, 3));
      c2 = q(1 - k, k + Rational(1, 6));
      break;
    case Family::C:
      c1 = q(2 * k - kHalf, Rational(1, 6) - k);
      c2 = q(kHalf - k, Rational(1, 6));
      break;
    default:
      throw std::invalid_argument("closed-form vertex values cover families A, B, C");
  }
  const QSqrt3 lt = QSqrt3(tiling_.L()) * tiling_.t_pow(2 * gen);
  QVec base = offset_sum(gen);
  QVec value = {eps_ * (lt * c1) + eps_ * base.x, eps_ * (lt * c2) + eps_ * base.y};
  if (rigid_.is_zero()) return value;
  QVec at = tiling_.vertex(f, gen);
  return value + rigid_at(at);
}

QVec DisplacementField::closed_form_value(InterfaceId id, const QVec& p) const {
  const Rational k(id.gen);
  const Rational k3 = k / 3;
  // Per interface kind: the one-sided limit printed as an explicit function
  // of a single coordinate.  Coefficients of (variable, L t^(2k)) for both
  // displacement components; CA and DE+ vary in y, all others in x.
  bool use_y = id.kind == InterfaceKind::CA || id.kind == InterfaceKind::DEx;
  QSqrt3 c1, d1, c2, d2;
  switch (id.kind) {
    case InterfaceKind::BA:
      c1 = q(6 * k - 2);
      d1 = q(2 * k - kHalf);
      c2 = q(0, -2 * k);
      d2 = q(1, Rational(1, 6));
      break;
    case InterfaceKind::EB:
      c1 = q(2 * k);
      d1 = q(kHalf, 2 * k3 - Rational(1, 3));
      c2 = q(0, Rational(2, 3) - 2 * k);
      d2 = q(Rational(2, 3), kHalf);
      break;
    case InterfaceKind::ED:
      c1 = q(-kHalf);
      d1 = q(Rational(1, 4) - k, -kHalf);
      c2 = q(0, kHalf - 2 * k);
      d2 = q(kHalf, Rational(5, 12));
      break;
    case InterfaceKind::DF:
      c1 = q(1 - 2 * k);
      d1 = q(-kHalf, -2 * k3);
      c2 = q(0, Rational(1, 3) - 2 * k);
      d2 = q(Rational(1, 3), kHalf);
      break;
    case InterfaceKind::CF:
      c1 = q(1 - 6 * k);
      d1 = q(2 * k - kHalf);
      c2 = q(0, 1 - 2 * k);
      d2 = q(0, Rational(1, 6));
      break;
    case InterfaceKind::CA:
      c1 = q(0, 2 * k - kHalf);
      d1 = q(0, Rational(-1, 12));
      c2 = q(kHalf);
      d2 = q(Rational(3, 4) - k);
      break;
    case InterfaceKind::BAx:
      c1 = q(-2 * k);
      d1 = q(kHalf - 2 * k, 4 * k3 - Rational(1, 3));
      c2 = q(0, Rational(-2, 3) - 2 * k);
      d2 = q(Rational(4, 3), Rational(-1, 6));
      break;
    case InterfaceKind::ACx:
      c1 = q(-kHalf);
      d1 = q(2 * k - kHalf, Rational(1, 4) - k);
      c2 = q(0, -kHalf - 2 * k);
      d2 = q(Rational(3, 4), Rational(1, 6));
      break;
    case InterfaceKind::FCx:
      c1 = q(1 + 2 * k);
      d1 = q(2 * k - kHalf, -4 * k3);
      c2 = q(0, -2 * k - Rational(1, 3));
      d2 = q(Rational(2, 3), Rational(1, 6));
      break;
    case InterfaceKind::DFx:
      c1 = q(1 + 6 * k);
      d1 = q(-4 * k - kHalf, 2 * k);
      c2 = q(0, -1 - 2 * k);
      d2 = q(-1, Rational(7, 6));
      break;
    case InterfaceKind::DEx:
      c1 = q(0, kHalf + 2 * k);
      d1 = q(Rational(1, 4), Rational(-1, 3));
      c2 = q(kHalf);
      d2 = q(2 * k, Rational(3, 4) - k);
      break;
    case InterfaceKind::BEx:
      c1 = q(-2 - 6 * k);
      d1 = q(-4 * k - kHalf, 2 * k);
      c2 = q(0, -2 * k);
      d2 = q(1, Rational(1, 6));
      break;
  }
  const QSqrt3& var = use_y ? p.y : p.x;
  const QSqrt3 lt = QSqrt3(tiling_.L()) * tiling_.t_pow(2 * id.gen);
  QVec base = offset_sum(id.gen);
  QVec value = {eps_ * (c1 * var + lt * d1 + base.x), eps_ * (c2 * var + lt * d2 + base.y)};
  if (rigid_.is_zero()) return value;
  return value + rigid_at(p);
}

InterfaceTrace DisplacementField::interface_trace(InterfaceId id, const Rational& s) const {
  if (s.sign() < 0 || s > 1) throw std::invalid_argument("trace parameter outside [0, 1]");
  Segment seg = tiling_.interface(id);
  QSqrt3 sq(s);
  QVec point = seg.p0 + sq * (seg.p1 - seg.p0);
  InterfaceTrace out;
  out.point = point;
  out.from_lower = piece(seg.lower).eval(point);
  out.from_upper = piece(seg.upper).eval(point);
  out.closed_form = closed_form_value(id, point);
  return out;
}

}  // namespace tristar
