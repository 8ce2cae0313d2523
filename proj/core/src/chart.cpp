#include "holoform/chart.hpp"

#include <cmath>

namespace holoform {

namespace {

SmallMat components_at(const ChartMetric& g, const ChartPoint& p) {
  if (!g.in_domain(p)) throw ChartDomainError("chart point outside metric domain");
  return g.components(p);
}

ChartPoint shifted(const ChartPoint& p, int i, cplx dz) {
  ChartPoint q = p;
  q.x[i] += dz;
  return q;
}

// Central difference of the metric components along the real axis of
// coordinate i. For holomorphic components this is the complex derivative;
// for real charts it is the ordinary partial.
SmallMat d_components(const ChartMetric& g, const ChartPoint& p, int i, double h, int order) {
  const int n = g.dim;
  SmallMat r(n);
  if (order == 2) {
    SmallMat gp = components_at(g, shifted(p, i, h));
    SmallMat gm = components_at(g, shifted(p, i, -h));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) r(a, b) = (gp(a, b) - gm(a, b)) / (2.0 * h);
  } else {
    SmallMat g2p = components_at(g, shifted(p, i, 2 * h));
    SmallMat gp = components_at(g, shifted(p, i, h));
    SmallMat gm = components_at(g, shifted(p, i, -h));
    SmallMat g2m = components_at(g, shifted(p, i, -2 * h));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        r(a, b) = (-g2p(a, b) + 8.0 * gp(a, b) - 8.0 * gm(a, b) + g2m(a, b)) / (12.0 * h);
  }
  return r;
}

// 4th-order step used for curvature: Gamma itself is accurate to ~1e-12 at
// this setting, so differentiating it once more stays below 1e-9.
constexpr double kCurvH = 1e-3;

Christoffels gamma_hi(const ChartMetric& g, const ChartPoint& p) {
  return christoffels(g, p, kCurvH, 4);
}

}  // namespace

cplx SmallMat::det() const {
  SmallMat a = *this;
  cplx d = 1.0;
  for (int c = 0; c < dim; ++c) {
    int piv = c;
    for (int r = c + 1; r < dim; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (std::abs(a(piv, c)) == 0.0) return 0.0;
    if (piv != c) {
      std::swap(a.m[piv], a.m[c]);
      d = -d;
    }
    d *= a(c, c);
    for (int r = c + 1; r < dim; ++r) {
      cplx f = a(r, c) / a(c, c);
      for (int k = c; k < dim; ++k) a(r, k) -= f * a(c, k);
    }
  }
  return d;
}

SmallMat SmallMat::inverse() const {
  SmallMat a = *this;
  SmallMat inv(dim);
  for (int i = 0; i < dim; ++i) inv(i, i) = 1.0;
  for (int c = 0; c < dim; ++c) {
    int piv = c;
    for (int r = c + 1; r < dim; ++r)
      if (std::abs(a(r, c)) > std::abs(a(piv, c))) piv = r;
    if (std::abs(a(piv, c)) < 1e-14) throw std::domain_error("SmallMat: singular matrix");
    if (piv != c) {
      std::swap(a.m[piv], a.m[c]);
      std::swap(inv.m[piv], inv.m[c]);
    }
    cplx d = a(c, c);
    for (int k = 0; k < dim; ++k) {
      a(c, k) /= d;
      inv(c, k) /= d;
    }
    for (int r = 0; r < dim; ++r) {
      if (r == c) continue;
      cplx f = a(r, c);
      if (f == cplx{}) continue;
      for (int k = 0; k < dim; ++k) {
        a(r, k) -= f * a(c, k);
        inv(r, k) -= f * inv(c, k);
      }
    }
  }
  return inv;
}

cplx metric_eval(const ChartMetric& g, const ChartPoint& p, const Coords& u, const Coords& v) {
  SmallMat gm = components_at(g, p);
  cplx s = 0;
  for (int i = 0; i < g.dim; ++i)
    for (int j = 0; j < g.dim; ++j) s += gm(i, j) * u[i] * v[j];
  return s;
}

Christoffels christoffels(const ChartMetric& g, const ChartPoint& p, double h, int order) {
  const int n = g.dim;
  SmallMat g0 = components_at(g, p);
  if (std::abs(g0.det()) < 1e-10) throw std::domain_error("christoffels: metric singular at point");
  SmallMat ginv = g0.inverse();

  std::array<SmallMat, 4> dg;
  for (int i = 0; i < n; ++i) dg[i] = d_components(g, p, i, h, order);

  Christoffels out;
  out.dim = n;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        cplx s = 0;
        for (int l = 0; l < n; ++l)
          s += ginv(k, l) * (dg[i](j, l) + dg[j](i, l) - dg[l](i, j));
        out.gamma[k][i][j] = 0.5 * s;
        out.gamma[k][j][i] = out.gamma[k][i][j];
      }
  return out;
}

Coords curvature_13(const ChartMetric& g, const ChartPoint& p, const Coords& u,
                    const Coords& v, const Coords& w) {
  const int n = g.dim;
  Christoffels gm = gamma_hi(g, p);

  // dgamma[m] = d Gamma / d x^m, 4th-order central differences.
  std::array<Christoffels, 4> dgamma;
  for (int m = 0; m < n; ++m) {
    Christoffels g2p = gamma_hi(g, shifted(p, m, 2 * kCurvH));
    Christoffels gp = gamma_hi(g, shifted(p, m, kCurvH));
    Christoffels gmn = gamma_hi(g, shifted(p, m, -kCurvH));
    Christoffels g2m = gamma_hi(g, shifted(p, m, -2 * kCurvH));
    dgamma[m].dim = n;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          dgamma[m].gamma[k][i][j] =
              (-g2p.gamma[k][i][j] + 8.0 * gp.gamma[k][i][j] - 8.0 * gmn.gamma[k][i][j] +
               g2m.gamma[k][i][j]) /
              (12.0 * kCurvH);
  }

  // R^l_{ijk} = d_i Gamma^l_jk - d_j Gamma^l_ik
  //             + Gamma^l_im Gamma^m_jk - Gamma^l_jm Gamma^m_ik
  Coords out{};
  for (int l = 0; l < n; ++l) {
    cplx s = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          cplx r = dgamma[i].gamma[l][j][k] - dgamma[j].gamma[l][i][k];
          for (int m = 0; m < n; ++m)
            r += gm.gamma[l][i][m] * gm.gamma[m][j][k] - gm.gamma[l][j][m] * gm.gamma[m][i][k];
          s += r * u[i] * v[j] * w[k];
        }
    out[l] = s;
  }
  return out;
}

cplx curvature_tensor(const ChartMetric& g, const ChartPoint& p, const Coords& v1,
                      const Coords& v2, const Coords& v3, const Coords& v4) {
  Coords rv = curvature_13(g, p, v1, v2, v3);
  return -metric_eval(g, p, rv, v4);
}

cplx sectional_curvature(const ChartMetric& g, const ChartPoint& p, const Coords& v,
                         const Coords& w) {
  cplx gvv = metric_eval(g, p, v, v);
  cplx gww = metric_eval(g, p, w, w);
  cplx gvw = metric_eval(g, p, v, w);
  cplx gram = gvv * gww - gvw * gvw;
  double scale = std::max({std::abs(gvv * gww), std::abs(gvw * gvw), 1e-30});
  if (std::abs(gram) < 1e-8 * scale) throw DegeneratePlaneError(std::abs(gram), gram);
  Coords rv = curvature_13(g, p, v, w, w);
  cplx num = metric_eval(g, p, rv, v);
  return num / gram;
}

Trajectory geodesic_integrate(const ChartMetric& g, const ChartPoint& p0, const Coords& v0,
                              double t_end, double step) {
  if (step <= 0) throw std::invalid_argument("geodesic_integrate: step must be positive");
  const int n = g.dim;

  auto accel = [&](const ChartPoint& x, const Coords& v) {
    Christoffels gm = christoffels(g, x);
    Coords a{};
    for (int k = 0; k < n; ++k) {
      cplx s = 0;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) s += gm.gamma[k][i][j] * v[i] * v[j];
      a[k] = -s;
    }
    return a;
  };

  Trajectory traj;
  ChartPoint x = p0;
  Coords v = v0;
  double t = 0;
  traj.samples.push_back({t, x, v});

  const long nsteps = std::lround(t_end / step);
  for (long s = 0; s < nsteps; ++s) {
    if (!g.in_domain(x)) {
      traj.exited_domain = true;
      break;
    }
    try {
      Coords k1x = v;
      Coords k1v = accel(x, v);
      ChartPoint x2 = x;
      Coords v2{};
      for (int i = 0; i < n; ++i) {
        x2.x[i] = x.x[i] + 0.5 * step * k1x[i];
        v2[i] = v[i] + 0.5 * step * k1v[i];
      }
      Coords k2x = v2;
      Coords k2v = accel(x2, v2);
      ChartPoint x3 = x;
      Coords v3{};
      for (int i = 0; i < n; ++i) {
        x3.x[i] = x.x[i] + 0.5 * step * k2x[i];
        v3[i] = v[i] + 0.5 * step * k2v[i];
      }
      Coords k3x = v3;
      Coords k3v = accel(x3, v3);
      ChartPoint x4 = x;
      Coords v4{};
      for (int i = 0; i < n; ++i) {
        x4.x[i] = x.x[i] + step * k3x[i];
        v4[i] = v[i] + step * k3v[i];
      }
      Coords k4x = v4;
      Coords k4v = accel(x4, v4);
      for (int i = 0; i < n; ++i) {
        x.x[i] += step / 6.0 * (k1x[i] + 2.0 * k2x[i] + 2.0 * k3x[i] + k4x[i]);
        v[i] += step / 6.0 * (k1v[i] + 2.0 * k2v[i] + 2.0 * k3v[i] + k4v[i]);
      }
    } catch (const ChartDomainError&) {
      traj.exited_domain = true;
      break;
    }
    t = (s + 1) * step;
    traj.samples.push_back({t, x, v});
  }
  return traj;
}

double holomorphy_residual(const ChartMetric& g, const ChartPoint& p, double h) {
  if (g.field != ScalarField::complex)
    throw std::invalid_argument("holomorphy_residual: complex-field chart required");
  const int n = g.dim;
  const cplx i_unit(0.0, 1.0);
  double worst = 0;
  for (int k = 0; k < n; ++k) {
    SmallMat dx_p = components_at(g, shifted(p, k, h));
    SmallMat dx_m = components_at(g, shifted(p, k, -h));
    SmallMat dy_p = components_at(g, shifted(p, k, i_unit * h));
    SmallMat dy_m = components_at(g, shifted(p, k, -i_unit * h));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        cplx ddx = (dx_p(a, b) - dx_m(a, b)) / (2.0 * h);
        cplx ddy = (dy_p(a, b) - dy_m(a, b)) / (2.0 * h);
        // dbar = (d/dx + i d/dy) / 2
        cplx dbar = 0.5 * (ddx + i_unit * ddy);
        worst = std::max(worst, std::abs(dbar));
      }
  }
  return worst;
}

ChartMetric flat_chart(int dim, ScalarField field) {
  ChartMetric g;
  g.dim = dim;
  g.field = field;
  g.components = [dim](const ChartPoint&) {
    SmallMat m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  };
  return g;
}

}  // namespace holoform
