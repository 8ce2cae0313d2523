#include "holoform/gspace.hpp"

#include <cmath>

#include "holoform/rng.hpp"

namespace holoform {

namespace {

const cplx kI(0.0, 1.0);

PslElement rot_pi_finite(cplx p, cplx q) {
  cplx f = kI / (p - q);
  CMat2 m{f * (p + q), f * (-2.0 * p * q), 2.0 * f, -f * (p + q)};
  return PslElement(m, 1e-8);
}

}  // namespace

double chordal_distance(const BoundaryPoint& p, const BoundaryPoint& q) {
  if (p.infinite && q.infinite) return 0.0;
  if (p.infinite) return 2.0 / std::sqrt(1.0 + std::norm(q.z));
  if (q.infinite) return 2.0 / std::sqrt(1.0 + std::norm(p.z));
  return 2.0 * std::abs(p.z - q.z) / std::sqrt((1.0 + std::norm(p.z)) * (1.0 + std::norm(q.z)));
}

ChartMetric g_chart_metric() {
  ChartMetric g;
  g.dim = 2;
  g.field = ScalarField::complex;
  g.domain_guard = [](const ChartPoint& p) { return std::abs(p.x[0] - p.x[1]) > 1e-9; };
  g.components = [](const ChartPoint& p) {
    cplx d = p.x[0] - p.x[1];
    SmallMat m(2);
    m(0, 1) = -2.0 / (d * d);
    m(1, 0) = m(0, 1);
    return m;
  };
  return g;
}

cplx g_cross_component(bool w1_chart, bool w2_chart, cplx c1, cplx c2) {
  // Coordinate changes z = 1/w of -2/(z1-z2)^2 dz1 dz2, per chart pair.
  if (!w1_chart && !w2_chart) {
    cplx d = c1 - c2;
    return -2.0 / (d * d);
  }
  if (w1_chart != w2_chart) {
    // mixed chart: g12 = 2/(z w - 1)^2 with z the affine and w the
    // reciprocal coordinate
    cplx zw = c1 * c2;
    cplx d = zw - 1.0;
    return 2.0 / (d * d);
  }
  cplx d = c1 - c2;
  return -2.0 / (d * d);
}

cplx boundary_coordinate(const BoundaryPoint& p, bool w_chart) {
  if (!w_chart) {
    if (p.infinite) throw std::domain_error("boundary_coordinate: infinity in affine chart");
    return p.z;
  }
  if (p.infinite) return 0.0;
  if (std::abs(p.z) < 1e-12) throw std::domain_error("boundary_coordinate: zero in w chart");
  return 1.0 / p.z;
}

bool prefers_w_chart(const BoundaryPoint& p) { return p.infinite || std::abs(p.z) > 1e8; }

BoundaryPoint mobius_apply(const PslElement& m, const BoundaryPoint& p) {
  const CMat2& a = m.rep();
  if (p.infinite) {
    if (std::abs(a.c) < 1e-14 * std::max(1.0, std::abs(a.a))) return BoundaryPoint::infinity();
    return BoundaryPoint::finite(a.a / a.c);
  }
  cplx num = a.a * p.z + a.b;
  cplx den = a.c * p.z + a.d;
  if (std::abs(den) < 1e-14 * std::max(1.0, std::abs(num))) return BoundaryPoint::infinity();
  return BoundaryPoint::finite(num / den);
}

GeodesicLine g_action(const PslElement& a, const GeodesicLine& line) {
  return {mobius_apply(a, line.p1), mobius_apply(a, line.p2)};
}

PslElement rot_pi(const GeodesicLine& line) {
  if (!line.p1.infinite && !line.p2.infinite) return rot_pi_finite(line.p1.z, line.p2.z);
  // Conjugate by an auxiliary Mobius map moving infinity off the line:
  // rot_pi(line) = B rot_pi(B^{-1} line) B^{-1}. Candidates cover any
  // single finite endpoint.
  const std::array<CMat2, 3> candidates = {
      CMat2{0.0, -1.0, 1.0, 0.0},   // z -> -1/z
      CMat2{1.0, -1.0, 1.0, 0.0},   // z -> 1 - 1/z
      CMat2{1.0, 1.0, 1.0, 2.0},    // z -> (z+1)/(z+2)
  };
  for (const CMat2& bm : candidates) {
    PslElement b(bm);
    GeodesicLine moved = g_action(b.inverse(), line);
    if (moved.p1.infinite || moved.p2.infinite) continue;
    if (std::abs(moved.p1.z - moved.p2.z) < 1e-9) continue;
    PslElement r = rot_pi_finite(moved.p1.z, moved.p2.z);
    return b * r * b.inverse();
  }
  throw std::runtime_error("rot_pi: no auxiliary chart move applies");
}

bool q_membership(const PslElement& m, double tol) {
  if (tol <= 0) throw std::invalid_argument("q_membership: tol must be positive");
  if (std::abs(m.rep().trace()) >= tol) return false;
  if (std::abs(m.rep().det() - 1.0) >= tol) return false;
  return !psl_equal(m, PslElement(), tol);
}

double rot_pi_pullback_check(const GeodesicLine& line, uint64_t seed, int pairs) {
  if (line.p1.infinite || line.p2.infinite)
    throw std::invalid_argument("rot_pi_pullback_check: finite endpoints required");
  if (std::abs(line.p1.z - line.p2.z) < 1e-6)
    throw std::domain_error("rot_pi_pullback_check: near-diagonal line");

  const double h = 1e-5;
  auto push = [&](cplx u1, cplx u2) {
    // complex finite-difference differential of rot_pi at the line;
    // 4th order so the entries of the pushforward stay trace-free well
    // below the tangent-vector validation tolerance
    auto at = [&](double s) {
      return rot_pi_finite(line.p1.z + s * u1, line.p2.z + s * u2).rep();
    };
    return (8.0 * (at(h) - at(-h)) - (at(2 * h) - at(-2 * h))) * (1.0 / (12.0 * h));
  };

  PslElement m = rot_pi(line);
  ChartMetric g = g_chart_metric();
  ChartPoint at{line.p1.z, line.p2.z};

  SplitMix64 rng(seed);
  double worst = 0;
  for (int k = 0; k < pairs; ++k) {
    cplx u1 = rng.gauss_complex();
    cplx u2 = rng.gauss_complex();
    cplx v1 = rng.gauss_complex();
    cplx v2 = rng.gauss_complex();
    cplx g_value = metric_eval(g, at, {u1, u2}, {v1, v2});
    CMat2 pu = push(u1, u2);
    CMat2 pv = push(v1, v2);
    cplx q_value = metric_at(m, {m, pu}, {m, pv});
    worst = std::max(worst, std::abs(g_value - q_value));
  }
  return worst;
}

}  // namespace holoform
