#include "holoform/quadric.hpp"

#include <cmath>

namespace holoform {

namespace {

cplx square_sum(const CVec& v) {
  cplx s = 0;
  for (int i = 0; i < v.dim(); ++i) s += v[i] * v[i];
  return s;
}

}  // namespace

QuadricPoint quadric_project(const CVec& w) {
  cplx c = square_sum(w);
  if (std::abs(c) < 1e-6) throw std::domain_error("quadric_project: near-isotropic vector");
  cplx s = std::sqrt(-1.0 / c);
  QuadricPoint p;
  p.z = w * s;
  p.residual = std::abs(square_sum(p.z) + 1.0);
  return p;
}

QuadricPoint quadric_sample(SplitMix64& rng, int n) {
  if (n < 2) throw std::invalid_argument("quadric_sample: n must be >= 2");
  for (int attempt = 0; attempt <= 100; ++attempt) {
    CVec w(n + 1);
    for (int i = 0; i <= n; ++i) w[i] = rng.gauss_complex();
    if (std::abs(square_sum(w)) < 1e-6) continue;
    return quadric_project(w);
  }
  throw std::runtime_error("quadric_sample: redraw budget exhausted");
}

QuadricFrame quadric_frame(const QuadricPoint& p) {
  const int dim = p.z.dim();
  QuadricFrame f;
  f.base = p;
  // <z, z> = -1, so orthogonalizing v against z adds <v, z> z.
  for (int k = 0; k < dim && static_cast<int>(f.vectors.size()) < dim - 1; ++k) {
    CVec v(dim);
    v[k] = 1.0;
    v = v + bilinear_cn(v, p.z) * p.z;
    for (const CVec& u : f.vectors) {
      cplx uu = bilinear_cn(u, u);
      v = v - (bilinear_cn(v, u) / uu) * u;
    }
    double mag = v.norm();
    if (mag < 1e-8) continue;
    cplx vv = bilinear_cn(v, v);
    if (std::abs(vv) < 1e-6 * mag * mag) continue;  // isotropic pivot
    f.vectors.push_back(v);
  }
  if (static_cast<int>(f.vectors.size()) != dim - 1)
    throw std::runtime_error("quadric_frame: could not complete tangent frame");
  return f;
}

ChartMetric quadric_chart(const QuadricPoint& p, cplx scale) {
  if (scale == cplx{}) throw std::invalid_argument("quadric_chart: scale must be nonzero");
  const int dim = p.z.dim();
  int j = 0;
  for (int i = 1; i < dim; ++i)
    if (std::abs(p.z[i]) > std::abs(p.z[j])) j = i;
  if (std::abs(p.z[j]) < 1e-8) throw std::domain_error("quadric_chart: degenerate base point");

  const int n = dim - 1;
  // The solved coordinate satisfies zj(u)^2 = -1 - sum u_a^2 =: q(u), so the
  // induced components delta_ab + u_a u_b / q(u) need no root branch at all.
  auto qfun = [n](const ChartPoint& u) {
    cplx q = -1.0;
    for (int a = 0; a < n; ++a) q -= u.x[a] * u.x[a];
    return q;
  };
  ChartMetric g;
  g.dim = n;
  g.field = ScalarField::complex;
  g.domain_guard = [qfun](const ChartPoint& u) { return std::abs(qfun(u)) > 1e-6; };
  g.components = [qfun, n, scale](const ChartPoint& u) {
    cplx q = qfun(u);
    SmallMat m(n);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) m(a, b) = scale * ((a == b ? 1.0 : 0.0) + u.x[a] * u.x[b] / q);
    return m;
  };
  return g;
}

ChartPoint quadric_chart_center(const QuadricPoint& p) {
  const int dim = p.z.dim();
  int j = 0;
  for (int i = 1; i < dim; ++i)
    if (std::abs(p.z[i]) > std::abs(p.z[j])) j = i;
  ChartPoint c;
  c.dim = dim - 1;
  int a = 0;
  for (int i = 0; i < dim; ++i)
    if (i != j) c.x[a++] = p.z[i];
  return c;
}

PslElement x3_to_sl2(const QuadricPoint& p) {
  if (p.z.dim() != 4) throw std::invalid_argument("x3_to_sl2: expected a point of X_3");
  return PslElement(f_map(p.z), 1e-8);
}

}  // namespace holoform
