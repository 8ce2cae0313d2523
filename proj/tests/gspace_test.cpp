#include <doctest.h>

#include "holoform/gspace.hpp"
#include "holoform/rng.hpp"

using namespace holoform;

namespace {
const cplx kI(0, 1);

PslElement random_psl(SplitMix64& rng) {
  Sl2Vector v = sl2_from_coefficients(
      {cplx(0.5) * rng.gauss_complex(), cplx(0.5) * rng.gauss_complex(),
       cplx(0.5) * rng.gauss_complex()});
  return exp_sl2(v);
}

BoundaryPoint random_finite(SplitMix64& rng) { return BoundaryPoint::finite(rng.gauss_complex()); }

GeodesicLine random_line(SplitMix64& rng) {
  for (;;) {
    BoundaryPoint a = random_finite(rng), b = random_finite(rng);
    if (std::abs(a.z - b.z) > 0.5) return {a, b};
  }
}
}  // namespace

TEST_CASE("endpoints must be distinct") {
  CHECK_THROWS_AS(GeodesicLine(BoundaryPoint::finite(1.0), BoundaryPoint::finite(1.0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(GeodesicLine(BoundaryPoint::infinity(), BoundaryPoint::infinity()),
                  std::invalid_argument);
}

TEST_CASE("cross component of the chart metric") {
  ChartMetric g = g_chart_metric();
  ChartPoint p{cplx(0.0), cplx(1.0)};
  SmallMat m = g.components(p);
  CHECK(std::abs(m(0, 1) - cplx(-2.0)) < 1e-14);
  CHECK(std::abs(m(1, 0) - cplx(-2.0)) < 1e-14);
  CHECK(std::abs(m(0, 0)) < 1e-14);
  CHECK(std::abs(m(1, 1)) < 1e-14);

  Coords v{};
  v[0] = 1.0;
  v[1] = 1.0;
  CHECK(std::abs(metric_eval(g, p, v, v) - cplx(-4.0)) < 1e-13);

  CHECK(std::abs(g_cross_component(false, false, 0.0, 1.0) - cplx(-2.0)) < 1e-14);
}

TEST_CASE("mixed-chart cross component agrees with the substitution w = 1/z") {
  // g12 in (z, w) coordinates is 2/(zw - 1)^2; check against the pullback
  // of the (z, z) formula under z2 = 1/w.
  cplx z(0.3, 0.2), w(0.4, -0.1);
  cplx direct = g_cross_component(false, true, z, w);
  cplx z2 = 1.0 / w;
  // dz2 = -dw / w^2, so g12(z,w) = g12(z,z2) * (-1/w^2)
  cplx pulled = g_cross_component(false, false, z, z2) * (-1.0 / (w * w));
  CHECK(std::abs(direct - pulled) < 1e-12 * (1 + std::abs(direct)));
  CHECK(std::abs(direct - 2.0 / ((z * w - 1.0) * (z * w - 1.0))) < 1e-12);
}

TEST_CASE("mobius action") {
  SplitMix64 rng(51);
  PslElement id;
  BoundaryPoint p = random_finite(rng);
  CHECK(chordal_distance(mobius_apply(id, p), p) < 1e-14);

  PslElement s(CMat2{0.0, -1.0, 1.0, 0.0});
  CHECK(mobius_apply(s, BoundaryPoint::finite(0.0)).infinite);
  CHECK(chordal_distance(mobius_apply(s, BoundaryPoint::infinity()),
                         BoundaryPoint::finite(0.0)) < 1e-14);

  for (int k = 0; k < 100; ++k) {
    PslElement a = random_psl(rng), b = random_psl(rng);
    BoundaryPoint q = random_finite(rng);
    BoundaryPoint lhs = mobius_apply(a * b, q);
    BoundaryPoint rhs = mobius_apply(a, mobius_apply(b, q));
    CHECK(chordal_distance(lhs, rhs) < 1e-10);
  }
}

TEST_CASE("loxodromic elements fix their axis as an ordered pair") {
  cplx lambda(1.3, 0.4);
  PslElement d(CMat2{lambda, 0.0, 0.0, 1.0 / lambda});
  GeodesicLine axis(BoundaryPoint::finite(0.0), BoundaryPoint::infinity());
  GeodesicLine img = g_action(d, axis);
  CHECK(chordal_distance(img.p1, axis.p1) < 1e-14);
  CHECK(chordal_distance(img.p2, axis.p2) < 1e-14);
}

TEST_CASE("rot_pi representatives at distinguished lines") {
  PslElement r0 = rot_pi({BoundaryPoint::finite(0.0), BoundaryPoint::infinity()});
  CHECK(psl_equal(r0, PslElement(CMat2{kI, 0.0, 0.0, -kI}), 1e-12));

  PslElement r1 = rot_pi({BoundaryPoint::finite(1.0), BoundaryPoint::finite(-1.0)});
  CHECK(psl_equal(r1, PslElement(CMat2{0.0, kI, kI, 0.0}), 1e-12));
}

TEST_CASE("rot_pi fixes endpoints and squares to the identity in PSL") {
  SplitMix64 rng(52);
  for (int s = 0; s < 200; ++s) {
    GeodesicLine line = random_line(rng);
    PslElement r = rot_pi(line);
    CHECK(q_membership(r, 1e-9));
    CHECK(chordal_distance(mobius_apply(r, line.p1), line.p1) < 1e-9);
    CHECK(chordal_distance(mobius_apply(r, line.p2), line.p2) < 1e-9);
    CHECK(psl_equal(r * r, PslElement(), 1e-9));
  }
  // endpoint at infinity goes through the auxiliary conjugation path
  GeodesicLine vert(BoundaryPoint::finite(cplx(0.7, -0.3)), BoundaryPoint::infinity());
  PslElement rv = rot_pi(vert);
  CHECK(q_membership(rv, 1e-9));
  CHECK(chordal_distance(mobius_apply(rv, vert.p1), vert.p1) < 1e-9);
  CHECK(mobius_apply(rv, vert.p2).infinite);
}

TEST_CASE("rot_pi is reversal-invariant and equivariant") {
  SplitMix64 rng(53);
  for (int s = 0; s < 100; ++s) {
    GeodesicLine line = random_line(rng);
    CHECK(psl_distance(rot_pi(line), rot_pi(line.reversed())) < 1e-10);
    PslElement a = random_psl(rng);
    PslElement lhs = rot_pi(g_action(a, line));
    PslElement rhs = a * rot_pi(line) * a.inverse();
    CHECK(psl_distance(lhs, rhs) < 1e-8);
  }
}

TEST_CASE("q_membership") {
  CHECK(q_membership(PslElement(CMat2{kI, 0.0, 0.0, -kI}), 1e-12));
  CHECK(!q_membership(PslElement(), 1e-12));
  CHECK(!q_membership(exp_sl2(Sl2Vector(CMat2{0.3, 0.0, 0.0, -0.3})), 1e-12));
}

TEST_CASE("rot_pi pulls the group metric back to the geodesic-space metric") {
  GeodesicLine base(BoundaryPoint::finite(0.0), BoundaryPoint::finite(1.0));
  CHECK(rot_pi_pullback_check(base, 7, 8) < 1e-7);

  SplitMix64 rng(54);
  for (int s = 0; s < 10; ++s) {
    GeodesicLine line = random_line(rng);
    CHECK(rot_pi_pullback_check(line, 100 + s, 6) < 1e-7);
  }
}

TEST_CASE("chart preference for large coordinates") {
  CHECK(prefers_w_chart(BoundaryPoint::infinity()));
  CHECK(prefers_w_chart(BoundaryPoint::finite(cplx(1e9, 0))));
  CHECK(!prefers_w_chart(BoundaryPoint::finite(cplx(2.0, 3.0))));
  CHECK(std::abs(boundary_coordinate(BoundaryPoint::finite(cplx(4.0)), true) - cplx(0.25)) <
        1e-15);
  CHECK(std::abs(boundary_coordinate(BoundaryPoint::infinity(), true)) == 0.0);
}
