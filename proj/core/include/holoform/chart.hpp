#pragma once

#include <array>
#include <functional>
#include <vector>

#include "holoform/cxlinear.hpp"

namespace holoform {

/// Coordinates of a chart point / tangent vector, capacity 4.
using Coords = std::array<cplx, 4>;

struct ChartPoint {
  Coords x{};
  int dim = 0;

  ChartPoint() = default;
  ChartPoint(std::initializer_list<cplx> xs) {
    dim = static_cast<int>(xs.size());
    int i = 0;
    for (cplx v : xs) x[i++] = v;
  }
};

/// Dense complex matrix up to 4x4, used for metric components and small
/// linear solves. Not a general linear-algebra type (see module non-goals).
struct SmallMat {
  std::array<std::array<cplx, 4>, 4> m{};
  int dim = 0;

  explicit SmallMat(int d = 0) : dim(d) {}

  cplx& operator()(int i, int j) { return m[i][j]; }
  const cplx& operator()(int i, int j) const { return m[i][j]; }

  cplx det() const;
  /// Inverse by Gaussian elimination with partial pivoting.
  SmallMat inverse() const;

  SmallMat operator*(cplx s) const {
    SmallMat r(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) r.m[i][j] = s * m[i][j];
    return r;
  }
};

enum class ScalarField { real, complex };

/// A metric presented by its component functions on an open chart.
/// For field == complex the components must be holomorphic on the guarded
/// domain; derivatives are then taken along the real axis of each
/// coordinate. For field == real all coordinates and components are real
/// (stored in the real parts).
struct ChartMetric {
  int dim = 0;
  ScalarField field = ScalarField::complex;
  std::function<SmallMat(const ChartPoint&)> components;
  std::function<bool(const ChartPoint&)> domain_guard;

  bool in_domain(const ChartPoint& p) const { return !domain_guard || domain_guard(p); }
};

struct Christoffels {
  int dim = 0;
  // gamma[k][i][j], symmetric in (i, j)
  std::array<std::array<std::array<cplx, 4>, 4>, 4> gamma{};
};

struct DegeneratePlaneError : std::domain_error {
  DegeneratePlaneError(double gram_abs_, cplx gram_)
      : std::domain_error("sectional_curvature: degenerate plane"),
        gram_abs(gram_abs_),
        gram(gram_) {}
  double gram_abs;
  cplx gram;
};

struct ChartDomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// g(p) evaluated on a pair of tangent coordinate vectors.
cplx metric_eval(const ChartMetric& g, const ChartPoint& p, const Coords& u, const Coords& v);

/// Christoffel symbols Gamma^k_ij = 1/2 g^{kl} (d_i g_jl + d_j g_il - d_l g_ij),
/// component derivatives by central differences of the given order (2 or 4)
/// with step h. Default h = 1e-5 balances truncation against roundoff for
/// O(1) data in double precision.
Christoffels christoffels(const ChartMetric& g, const ChartPoint& p, double h = 1e-5,
                          int order = 2);

/// (1,3) curvature R(u,v)w in chart coordinates, from Gamma and its finite
/// difference derivatives (4th-order stencils, step 1e-3).
Coords curvature_13(const ChartMetric& g, const ChartPoint& p, const Coords& u,
                    const Coords& v, const Coords& w);

/// (0,4) curvature with the sign convention R(X,Y,Z,T) = -<R(X,Y)Z, T>.
/// The leading minus is adopted kernel-wide; it is what makes the model
/// spaces below come out with sectional curvature -1.
cplx curvature_tensor(const ChartMetric& g, const ChartPoint& p, const Coords& v1,
                      const Coords& v2, const Coords& v3, const Coords& v4);

/// K(Span(v,w)) = <R(v,w)w, v> / (|v|^2 |w|^2 - <v,w>^2). Throws
/// DegeneratePlaneError when the Gram determinant is below 1e-8 relative to
/// the magnitude of the entries (complex planes can be near-isotropic, so
/// the threshold is relative).
cplx sectional_curvature(const ChartMetric& g, const ChartPoint& p, const Coords& v,
                         const Coords& w);

struct TrajectorySample {
  double t = 0;
  ChartPoint x;
  Coords v{};
};

struct Trajectory {
  std::vector<TrajectorySample> samples;
  bool exited_domain = false;
};

/// RK4 integration of x'' + Gamma(x)(x', x') = 0 with real time parameter.
/// Stops early (exited_domain = true) if the trajectory leaves the guarded
/// chart domain.
Trajectory geodesic_integrate(const ChartMetric& g, const ChartPoint& p0, const Coords& v0,
                              double t_end, double step);

/// Max Cauchy-Riemann residual |dg/dzbar| over components and coordinates,
/// estimated by central differences along the real and imaginary axes.
/// Requires a complex-field chart.
double holomorphy_residual(const ChartMetric& g, const ChartPoint& p, double h = 1e-5);

/// The flat model (C^n, <,>_0) as a chart metric (constant identity
/// components, no domain restriction).
ChartMetric flat_chart(int dim, ScalarField field = ScalarField::complex);

// Small coordinate helpers shared by the geometry modules.
inline Coords coords_add(const Coords& a, const Coords& b, int dim) {
  Coords r{};
  for (int i = 0; i < dim; ++i) r[i] = a[i] + b[i];
  return r;
}
inline Coords coords_scale(cplx s, const Coords& a, int dim) {
  Coords r{};
  for (int i = 0; i < dim; ++i) r[i] = s * a[i];
  return r;
}
inline double coords_max_abs(const Coords& a, int dim) {
  double r = 0;
  for (int i = 0; i < dim; ++i) r = std::max(r, std::abs(a[i]));
  return r;
}

}  // namespace holoform
