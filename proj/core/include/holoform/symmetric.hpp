#pragma once

#include <cstdint>

#include "holoform/chart.hpp"
#include "holoform/gspace.hpp"
#include "holoform/sl2.hpp"

namespace holoform {

/// Point of H^3 in the half-space model, height t > 0.
struct H3Point {
  double x = 0, y = 0, t = 1;

  H3Point() = default;
  H3Point(double x_, double y_, double t_) : x(x_), y(y_), t(t_) {
    if (!(t > 0)) throw std::invalid_argument("H3Point: height must be positive");
  }
};

enum class Split { one, two };

/// Cartan decomposition of a trace-free matrix:
///  - Split::one  (for H^3):      su(2) (+) Hermitian trace-free,
///  - Split::two  (for geodesics): antisymmetric (+) symmetric trace-free.
struct CartanSplit {
  Split which;
  Sl2Vector h_part;
  Sl2Vector m_part;
};

/// Base points fixed for the whole build: x1 = (0,0,1) in H^3 and
/// x2 = (i, -i) in the space of geodesics. Stab(x1)_0 is PSU(2) with Lie
/// algebra su(2) = h_1; Stab(x2)_0 is SO(2,C) with Lie algebra o(2,C) = h_2.
/// The base line has to be the one fixed by exp(o(2,C)), otherwise h_2 is
/// not the stabilizer algebra and the symmetric-space identities fail.
H3Point base_h3();
GeodesicLine base_line();

/// Half-space metric (dx^2 + dy^2 + dt^2)/t^2 as a real-field chart.
ChartMetric h3_metric_chart();

/// PSL action on H^3 by quaternionic evaluation q -> (aq+b)(cq+d)^{-1}
/// with q = x + y i + t j.
H3Point h3_action(const PslElement& a, const H3Point& p);

CartanSplit cartan_split(const Sl2Vector& v, Split which);

/// Evaluation maps beta_i(A) = A . x_i.
H3Point beta1(const PslElement& a);
GeodesicLine beta2(const PslElement& a);

/// Differential of t -> beta1(A exp(tV)) at t = 0, half-space coordinates.
std::array<double, 3> beta1_differential(const PslElement& a, const Sl2Vector& v);

/// Chart pair used to express a geodesic line in coordinates.
struct GChartPair {
  bool w1 = false, w2 = false;
};
GChartPair g_chart_of(const GeodesicLine& line);

/// Differential of t -> beta2(A exp(tV)) at t = 0, in the chart pair of the
/// base line beta2(A).
std::array<cplx, 2> beta2_differential(const PslElement& a, const Sl2Vector& v,
                                       GChartPair* chart_out = nullptr);

/// Value of the geodesic-space metric on tangent pairs at a line, in its
/// preferred chart pair.
cplx g_metric_value(const GeodesicLine& line, const std::array<cplx, 2>& u,
                    const std::array<cplx, 2>& v);

/// Max residual over a sample of V, W in m_i between the target metric on
/// the pushforwards d_A beta_i (L_A V) and 4 <V, W>. This is the
/// numerical content of the scaling proposition.
double scaling_isometry_check(Split which, const PslElement& a, uint64_t seed, int samples);

/// Residual between the chart-kernel (1,3) curvature of
/// g_i = (1/4) x (standard X_i metric) applied to (dbeta U, dbeta V,
/// dbeta W) at the base point and -dbeta([[U,V],W]).
double symmetric_curvature_check(Split which, const Sl2Vector& u, const Sl2Vector& v,
                                 const Sl2Vector& w);

/// The metric g_i itself as a chart (for curvature cross-checks):
/// Split::one -> (1/4) h3 metric; Split::two -> (1/4) geodesic-space metric
/// in the finite (z1, z2) chart containing the base line.
ChartMetric symmetric_space_metric(Split which);
ChartPoint symmetric_space_base_coords(Split which);

}  // namespace holoform
