#include "tristar/jump.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace tristar {

namespace {

QMat spin_matrix(const QSqrt3& w) { return {QSqrt3(0), -w, w, QSqrt3(0)}; }

std::string format_double(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

double max_abs(const DMat& m) {
  return std::max({std::abs(m.a00), std::abs(m.a01), std::abs(m.a10), std::abs(m.a11)});
}

}  // namespace

QSqrt3 rank_one_defect(const QMat& h_plus, const QMat& h_minus) {
  return (h_plus - h_minus).det();
}

JumpSolution solve_jump(const QMat& e_plus, const QMat& skew_plus, const QMat& e_minus,
                        const QVec& n, const QSqrt3& eps) {
  if (norm_sq(n) != QSqrt3(1)) throw std::invalid_argument("normal must be an exact unit vector");
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  QMat d = (e_plus + skew_plus) - e_minus;
  // d - eps [[0,-w],[w,0]] = a (x) n, i.e.
  //   d00 = a0 n0        d01 + eps w = a0 n1
  //   d10 - eps w = a1 n0        d11 = a1 n1
  JumpSolution out;
  out.normal = n;
  if (n.x.abs() >= n.y.abs()) {
    out.amplitude.x = d.a00 / n.x;
    out.spin = (out.amplitude.x * n.y - d.a01) / eps;
    out.amplitude.y = (d.a10 - eps * out.spin) / n.x;
    if (out.amplitude.y * n.y != d.a11)
      throw std::domain_error("no spin makes the jump rank-one along this normal");
  } else {
    out.amplitude.y = d.a11 / n.y;
    out.spin = (d.a10 - out.amplitude.y * n.x) / eps;
    out.amplitude.x = (d.a01 + eps * out.spin) / n.y;
    if (out.amplitude.x * n.x != d.a00)
      throw std::domain_error("no spin makes the jump rank-one along this normal");
  }
  return out;
}

std::vector<JumpSolution> enumerate_jumps(const QMat& e_plus, const QMat& e_minus,
                                          const QSqrt3& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps must be positive");
  QMat d = e_plus - e_minus;
  // det(d + eps [[0,w],[-w,0]]) = eps^2 w^2 + eps w (d01 - d10) + det d = 0,
  // a quadratic in (eps w).
  QSqrt3 b = d.a01 - d.a10;
  QSqrt3 disc = b * b - QSqrt3(4) * d.det();
  auto root = QSqrt3::sqrt(disc);
  if (!root) throw std::domain_error("no rank-one connection solvable in the field");

  std::vector<QSqrt3> spins;
  QSqrt3 half(Rational(1, 2));
  spins.push_back(half * (-b + *root) / eps);
  if (!root->is_zero()) spins.push_back(half * (-b - *root) / eps);

  std::vector<JumpSolution> out;
  for (const QSqrt3& w : spins) {
    QMat j = d - eps * spin_matrix(w);
    JumpSolution sol;
    sol.spin = w;
    QVec row0{j.a00, j.a01}, row1{j.a10, j.a11};
    QSqrt3 n0 = norm_sq(row0), n1 = norm_sq(row1);
    if (n0.is_zero() && n1.is_zero()) {
      sol.normal = {QSqrt3(1), QSqrt3(0)};  // zero jump: any normal works
      out.push_back(sol);
      continue;
    }
    const QVec& row = n0 >= n1 ? row0 : row1;
    auto len = QSqrt3::sqrt(n0 >= n1 ? n0 : n1);
    if (!len) throw std::domain_error("jump normal is not normalizable in the field");
    QVec n{row.x / *len, row.y / *len};
    if (n.y.sign() < 0 || (n.y.is_zero() && n.x.sign() < 0)) n = -n;
    sol.normal = n;
    sol.amplitude = j * n;  // a = J n since |n| = 1
    if (outer(sol.amplitude, n) != j)
      throw std::domain_error("jump matrix is not rank-one at the computed spin");
    out.push_back(sol);
  }
  std::stable_sort(out.begin(), out.end(), [](const JumpSolution& l, const JumpSolution& r) {
    return r.normal.x * r.normal.x < l.normal.x * l.normal.x;
  });
  return out;
}

namespace {

QMat mutated_gradient(const DisplacementField& field, RegionId id, Mutation mutation) {
  QMat h = field.gradient(id);
  if (mutation == Mutation::NegateSkewB0 && id == RegionId{Family::B, 0})
    return sym_part(h) - skew_part(h);
  return h;
}

}  // namespace

CompatReport verify_tiling(const DisplacementField& field, int kmax, Mutation mutation,
                           Backend backend) {
  if (kmax < 0) throw std::invalid_argument("negative generation bound");
  CompatReport report;
  report.kmax = kmax;
  report.backend = backend;
  for (int k = 0; k <= kmax; ++k) {
    for (InterfaceKind kind : kInterfaceKinds) {
      Segment seg = field.tiling().interface({kind, k});
      QMat jump = mutated_gradient(field, seg.upper, mutation) -
                  mutated_gradient(field, seg.lower, mutation);
      CompatCheck check;
      check.id = seg.id;
      check.amplitude = jump * seg.normal;
      if (backend == Backend::Exact) {
        QSqrt3 det = jump.det();
        check.det_ok = det.is_zero();
        check.reconstruction_ok = outer(check.amplitude, seg.normal) == jump;
        check.residual = det.str();
      } else {
        DMat j = to_double(jump);
        DVec n = to_double(seg.normal);
        DVec a{j.a00 * n.x + j.a01 * n.y, j.a10 * n.x + j.a11 * n.y};
        DMat recon{a.x * n.x, a.x * n.y, a.y * n.x, a.y * n.y};
        double scale = std::max(1.0, max_abs(j));
        double det_res = std::abs(j.det());
        double rec_res = max_abs(j - recon);
        check.det_ok = det_res <= 1e-12 * scale * scale;
        check.reconstruction_ok = rec_res <= 1e-12 * scale;
        check.residual = format_double(std::max(det_res, rec_res));
      }
      if (!check.ok()) ++report.failures;
      report.checks.push_back(std::move(check));
    }
  }
  return report;
}

}  // namespace tristar
