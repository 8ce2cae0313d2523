#include "holoform/sl2.hpp"

#include <cmath>

namespace holoform {

namespace {

// sinh(s)/s with the removable singularity filled by series.
cplx sinhc(cplx s) {
  if (std::abs(s) < 1e-4) {
    cplx s2 = s * s;
    return 1.0 + s2 / 6.0 + s2 * s2 / 120.0;
  }
  return std::sinh(s) / s;
}

// ad_M as a 3x3 matrix in sl2_basis() coordinates.
SmallMat ad_matrix(const Sl2Vector& m) {
  auto basis = sl2_basis();
  SmallMat a(3);
  for (int j = 0; j < 3; ++j) {
    auto col = sl2_coefficients(bracket(m, basis[j]));
    for (int i = 0; i < 3; ++i) a(i, j) = col[i];
  }
  return a;
}

SmallMat mat3_mul(const SmallMat& a, const SmallMat& b) {
  SmallMat r(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      cplx s = 0;
      for (int k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
      r(i, j) = s;
    }
  return r;
}

}  // namespace

Sl2Vector bracket(const Sl2Vector& m, const Sl2Vector& n) {
  return Sl2Vector(m.mat() * n.mat() - n.mat() * m.mat());
}

cplx killing(const Sl2Vector& m, const Sl2Vector& n) {
  return 4.0 * (m.mat() * n.mat()).trace();
}

cplx hrm_metric(const Sl2Vector& m, const Sl2Vector& n) {
  return 0.5 * (m.mat() * n.mat()).trace();
}

cplx metric_at(const PslElement& a, const TangentAtGroup& u, const TangentAtGroup& v) {
  if (psl_distance(u.base, a) > 1e-10 || psl_distance(v.base, a) > 1e-10)
    throw std::invalid_argument("metric_at: tangent base point mismatch");
  CMat2 ai = a.inverse().rep();
  return hrm_metric(Sl2Vector(ai * u.vec, 1e-8), Sl2Vector(ai * v.vec, 1e-8));
}

PslElement exp_sl2(const Sl2Vector& m) {
  cplx s = std::sqrt(-m.mat().det());
  CMat2 e = std::cosh(s) * CMat2::identity() + sinhc(s) * m.mat();
  return PslElement(e, 1e-8);
}

Sl2Vector adjoint(const PslElement& a, const Sl2Vector& m) {
  return Sl2Vector(a.rep() * m.mat() * a.inverse().rep(), 1e-10);
}

double psl_distance(const PslElement& a, const PslElement& b) {
  return std::min((a.rep() - b.rep()).max_abs(), (a.rep() + b.rep()).max_abs());
}

bool psl_equal(const PslElement& a, const PslElement& b, double tol) {
  if (tol <= 0) throw std::invalid_argument("psl_equal: tol must be positive");
  return psl_distance(a, b) < tol;
}

std::array<Sl2Vector, 3> sl2_basis() {
  const cplx i(0.0, 1.0);
  return {Sl2Vector(CMat2{1.0, 0.0, 0.0, -1.0}), Sl2Vector(CMat2{0.0, 1.0, 1.0, 0.0}),
          Sl2Vector(CMat2{0.0, i, -i, 0.0})};
}

std::array<cplx, 3> sl2_coefficients(const Sl2Vector& m) {
  const cplx i(0.0, 1.0);
  const CMat2& v = m.mat();
  // v = cH * diag(1,-1) + cX * [[0,1],[1,0]] + cY * [[0,i],[-i,0]]
  return {v.a, 0.5 * (v.b + v.c), (v.b - v.c) / (2.0 * i)};
}

Sl2Vector sl2_from_coefficients(const std::array<cplx, 3>& c) {
  auto basis = sl2_basis();
  return Sl2Vector(basis[0].mat() * c[0] + basis[1].mat() * c[1] + basis[2].mat() * c[2]);
}

ChartMetric sl2_group_chart() {
  ChartMetric g;
  g.dim = 3;
  g.field = ScalarField::complex;
  g.domain_guard = [](const ChartPoint& p) {
    double s = 0;
    for (int i = 0; i < 3; ++i) s += std::norm(p.x[i]);
    return std::sqrt(s) < 1.2;
  };
  g.components = [](const ChartPoint& p) {
    Sl2Vector m = sl2_from_coefficients({p.x[0], p.x[1], p.x[2]});
    SmallMat ad = ad_matrix(m);
    // J = sum_{k>=0} (-ad)^k / (k+1)!
    SmallMat j(3);
    SmallMat term(3);
    for (int i = 0; i < 3; ++i) {
      j(i, i) = 1.0;
      term(i, i) = 1.0;
    }
    for (int k = 1; k <= 24; ++k) {
      term = mat3_mul(term, ad);
      cplx coef = (k % 2 == 0 ? 1.0 : -1.0) / std::tgamma(static_cast<double>(k) + 2.0);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) j(a, b) += coef * term(a, b);
    }
    // Basis is orthonormal under (1/8) Kill, so g = J^T J (no conjugation).
    SmallMat comp(3);
    for (int a = 0; a < 3; ++a)
      for (int b = a; b < 3; ++b) {
        cplx s = 0;
        for (int k = 0; k < 3; ++k) s += j(k, a) * j(k, b);
        comp(a, b) = s;
        comp(b, a) = s;
      }
    return comp;
  };
  return g;
}

Coords sl2_chart_coords_of_exp(const Sl2Vector& v, double t) {
  auto c = sl2_coefficients(v);
  return {t * c[0], t * c[1], t * c[2], 0.0};
}

}  // namespace holoform
