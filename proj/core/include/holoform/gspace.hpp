#pragma once

#include <cstdint>

#include "holoform/chart.hpp"
#include "holoform/sl2.hpp"

namespace holoform {

/// Point of the boundary CP^1 in a two-chart representation: either a
/// finite affine coordinate z or the point at infinity.
struct BoundaryPoint {
  bool infinite = false;
  cplx z{};

  static BoundaryPoint finite(cplx z) { return {false, z}; }
  static BoundaryPoint infinity() { return {true, {}}; }
};

/// Chordal distance on CP^1 (round-sphere distance, diameter 2).
double chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q);

/// Oriented geodesic of H^3: ordered pair of distinct boundary points.
struct GeodesicLine {
  BoundaryPoint p1, p2;

  GeodesicLine(BoundaryPoint a, BoundaryPoint b) : p1(a), p2(b) {
    if (chordal_distance(p1, p2) <= 1e-12)
      throw std::invalid_argument("GeodesicLine: endpoints must be distinct");
  }
  GeodesicLine reversed() const { return {p2, p1}; }
};

/// The chart metric of the space of geodesics in (z1, z2) coordinates:
/// -4/(z1-z2)^2 dz1 dz2. Under the symmetric-product convention
/// dz1 dz2 = (dz1 (x) dz2 + dz2 (x) dz1) / 2 the cross components are
/// g12 = g21 = -2/(z1-z2)^2; the diagonal components vanish. Guarded away
/// from the diagonal (|z1 - z2| > 1e-9).
ChartMetric g_chart_metric();

/// Cross component g12 of the geodesic-space metric in the chart pair
/// selected per endpoint: z itself when w_chart is false, w = 1/z when
/// true. c1, c2 are the chart coordinates.
cplx g_cross_component(bool w1_chart, bool w2_chart, cplx c1, cplx c2);

/// Coordinate of a boundary point in the requested chart.
cplx boundary_coordinate(const BoundaryPoint& p, bool w_chart);

/// Prefer the affine chart unless the point is at infinity or very large.
bool prefers_w_chart(const BoundaryPoint& p);

/// Mobius action z -> (az + b)/(cz + d) with explicit pole handling; the
/// sign of the representative is immaterial.
BoundaryPoint mobius_apply(const PslElement& a, const BoundaryPoint& p);

/// Diagonal action on ordered endpoint pairs.
GeodesicLine g_action(const PslElement& a, const GeodesicLine& line);

/// The rotation of angle pi around a line. For finite endpoints p, q the
/// representative is (i/(p-q)) [[p+q, -2pq], [2, -(p+q)]] (trace-free,
/// det 1, fixes p and q); an endpoint at infinity is handled by
/// conjugating with an auxiliary Mobius map that moves infinity off the
/// line. The result squares to -I2, i.e. to the identity in PSL.
PslElement rot_pi(const GeodesicLine& line);

/// Membership in Q = PSL intersect P(sl): trace-free, det 1, not the
/// identity in PSL.
bool q_membership(const PslElement& m, double tol);

/// Max residual between the geodesic-space metric on tangent pairs at the
/// line and the induced PSL metric on their pushforwards under the finite
/// difference differential of rot_pi. Requires finite endpoints away from
/// the diagonal.
double rot_pi_pullback_check(const GeodesicLine& line, uint64_t seed, int pairs = 6);

}  // namespace holoform
