#pragma once

#include "holoform/chart.hpp"
#include "holoform/cxlinear.hpp"

namespace holoform {

/// Trace-free 2x2 complex matrix, an element of sl(2,C).
class Sl2Vector {
 public:
  Sl2Vector() = default;
  explicit Sl2Vector(const CMat2& m, double tol = 1e-12) : m_(m) {
    if (std::abs(m.trace()) > tol) throw std::invalid_argument("Sl2Vector: matrix not trace-free");
  }
  const CMat2& mat() const { return m_; }

  Sl2Vector operator+(const Sl2Vector& o) const { return Sl2Vector(m_ + o.m_); }
  Sl2Vector operator-(const Sl2Vector& o) const { return Sl2Vector(m_ - o.m_); }
  Sl2Vector operator*(cplx s) const { return Sl2Vector(m_ * s); }

 private:
  CMat2 m_;
};

inline Sl2Vector operator*(cplx s, const Sl2Vector& v) { return v * s; }

/// Unit-determinant representative of an element of (P)SL(2,C). The +-I2
/// quotient lives only in psl_equal; multiplication and inversion act on the
/// stored SL(2,C) representative.
class PslElement {
 public:
  PslElement() : m_(CMat2::identity()) {}
  explicit PslElement(const CMat2& m, double tol = 1e-10) : m_(m) {
    if (std::abs(m.det() - 1.0) > tol)
      throw std::invalid_argument("PslElement: determinant must be 1");
  }
  const CMat2& rep() const { return m_; }

  PslElement operator*(const PslElement& o) const {
    PslElement r;
    r.m_ = m_ * o.m_;
    return r;
  }
  PslElement inverse() const {
    PslElement r;
    r.m_ = {m_.d, -m_.b, -m_.c, m_.a};  // adjugate; det is 1
    return r;
  }

 private:
  CMat2 m_;
};

/// Tangent vector at a group point: a raw 2x2 matrix V with A^{-1} V
/// trace-free.
struct TangentAtGroup {
  PslElement base;
  CMat2 vec;
};

/// Commutator MN - NM.
Sl2Vector bracket(const Sl2Vector& m, const Sl2Vector& n);

/// Killing form of sl(2,C): Kill(M,N) = 4 tr(MN).
cplx killing(const Sl2Vector& m, const Sl2Vector& n);

/// The rescaled bi-invariant metric (1/8) Kill = (1/2) tr(MN) at the
/// identity.
cplx hrm_metric(const Sl2Vector& m, const Sl2Vector& n);

/// The bi-invariant metric at an arbitrary group point: left-translate the
/// tangent vectors back to the identity. Right translation gives the same
/// value by Ad-invariance.
cplx metric_at(const PslElement& a, const TangentAtGroup& u, const TangentAtGroup& v);

/// Closed-form exponential for trace-free M: with s^2 = -det(M),
/// exp(M) = cosh(s) I + sinhc(s) M. Both square roots of -det(M) give the
/// same value (cosh and sinhc are even), so the branch choice is
/// immaterial; the removable singularity at s = 0 is handled by series.
PslElement exp_sl2(const Sl2Vector& m);

/// Ad(A) M = A M A^{-1}; well defined on PSL since the sign cancels.
Sl2Vector adjoint(const PslElement& a, const Sl2Vector& m);

/// Equality in PSL: representatives agree up to global sign, entrywise-max
/// norm.
bool psl_equal(const PslElement& a, const PslElement& b, double tol);
double psl_distance(const PslElement& a, const PslElement& b);

/// Orthonormal basis of sl(2,C) under (1/8) Kill:
/// diag(1,-1), [[0,1],[1,0]], [[0,i],[-i,0]].
std::array<Sl2Vector, 3> sl2_basis();

/// Coefficients of a trace-free matrix in sl2_basis().
std::array<cplx, 3> sl2_coefficients(const Sl2Vector& m);
Sl2Vector sl2_from_coefficients(const std::array<cplx, 3>& c);

/// Exponential chart of SL(2,C) around the identity: coordinates are the
/// basis coefficients of M in A = exp(M), metric components are
/// g_ij(m) = < J(m) e_i, J(m) e_j > where J = (1 - e^{-ad_M}) / ad_M is the
/// left trivialized differential of exp (evaluated by its power series).
/// Holomorphic in the coordinates; guard |m| < 1.2.
ChartMetric sl2_group_chart();

/// Chart coordinates of exp_sl2(tV): t * coefficients(V) by construction.
Coords sl2_chart_coords_of_exp(const Sl2Vector& v, double t);

}  // namespace holoform
