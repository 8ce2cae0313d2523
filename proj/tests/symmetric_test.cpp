#include <doctest.h>

#include "holoform/rng.hpp"
#include "holoform/symmetric.hpp"

using namespace holoform;

namespace {
const cplx kI(0, 1);
const Sl2Vector kH(CMat2{1.0, 0.0, 0.0, -1.0});
const Sl2Vector kX(CMat2{0.0, 1.0, 1.0, 0.0});
const Sl2Vector kY(CMat2{0.0, kI, -kI, 0.0});
const Sl2Vector kJ(CMat2{0.0, 1.0, -1.0, 0.0});  // generator of o(2,C)

Sl2Vector random_sl2(SplitMix64& rng) {
  return sl2_from_coefficients({rng.gauss_complex(), rng.gauss_complex(), rng.gauss_complex()});
}

PslElement random_psl(SplitMix64& rng) {
  return exp_sl2(random_sl2(rng) * cplx(0.5));
}
}  // namespace

TEST_CASE("half-space metric normalization") {
  ChartMetric g = h3_metric_chart();
  ChartPoint p{0.0, 0.0, 2.0};
  Coords dt{};
  dt[2] = 1.0;
  CHECK(std::abs(metric_eval(g, p, dt, dt) - cplx(0.25)) < 1e-14);
  Coords u{}, v{};
  u[0] = 1.0;
  v[1] = 1.0;
  CHECK(std::abs(sectional_curvature(g, p, u, v) - cplx(-1.0)) < 1e-7);
}

TEST_CASE("vertical geodesics stay on the axis") {
  ChartMetric g = h3_metric_chart();
  ChartPoint p0{0.0, 0.0, 1.0};
  Coords v0{};
  v0[2] = 1.0;
  Trajectory tr = geodesic_integrate(g, p0, v0, 1.0, 1.0 / 64);
  for (const auto& s : tr.samples) {
    CHECK(std::abs(s.x.x[0]) < 1e-12);
    CHECK(std::abs(s.x.x[1]) < 1e-12);
  }
  // unit speed in the hyperbolic metric: t(1) = e
  CHECK(std::abs(tr.samples.back().x.x[2] - std::exp(1.0)) < 1e-6);
}

TEST_CASE("quaternionic action on the half space") {
  H3Point base = base_h3();
  H3Point p = h3_action(PslElement(), base);
  CHECK(p.x == doctest::Approx(0.0));
  CHECK(p.t == doctest::Approx(1.0));

  double lambda = 1.7;
  PslElement d(CMat2{lambda, 0.0, 0.0, 1.0 / lambda});
  H3Point q = h3_action(d, base);
  CHECK(q.x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(q.y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(q.t == doctest::Approx(lambda * lambda));

  // composition
  SplitMix64 rng(61);
  for (int s = 0; s < 50; ++s) {
    PslElement a = random_psl(rng), b = random_psl(rng);
    H3Point lhs = h3_action(a * b, base);
    H3Point rhs = h3_action(a, h3_action(b, base));
    CHECK(std::abs(lhs.x - rhs.x) + std::abs(lhs.y - rhs.y) + std::abs(lhs.t - rhs.t) < 1e-10);
  }
}

TEST_CASE("Cartan splits") {
  CartanSplit s1 = cartan_split(kH, Split::one);
  CHECK(s1.h_part.mat().max_abs() < 1e-15);
  CHECK((s1.m_part.mat() - kH.mat()).max_abs() < 1e-15);

  CartanSplit s2 = cartan_split(kJ, Split::two);
  CHECK((s2.h_part.mat() - kJ.mat()).max_abs() < 1e-15);
  CHECK(s2.m_part.mat().max_abs() < 1e-15);

  SplitMix64 rng(62);
  for (Split which : {Split::one, Split::two})
    for (int s = 0; s < 100; ++s) {
      Sl2Vector v = random_sl2(rng);
      CartanSplit c = cartan_split(v, which);
      CHECK((c.h_part.mat() + c.m_part.mat() - v.mat()).max_abs() < 1e-14);
      // [h, m] in m and [m, m] in h
      Sl2Vector hm = bracket(c.h_part, c.m_part);
      CHECK(cartan_split(hm, which).h_part.mat().max_abs() < 1e-12 * (1 + hm.mat().max_abs()));
      CartanSplit cw = cartan_split(random_sl2(rng), which);
      Sl2Vector mm = bracket(c.m_part, cw.m_part);
      CHECK(cartan_split(mm, which).m_part.mat().max_abs() < 1e-12 * (1 + mm.mat().max_abs()));
    }
}

TEST_CASE("evaluation maps send the identity to the base points") {
  H3Point b1 = beta1(PslElement());
  CHECK(std::abs(b1.x) + std::abs(b1.y) + std::abs(b1.t - 1.0) < 1e-14);
  GeodesicLine b2 = beta2(PslElement());
  CHECK(chordal_distance(b2.p1, BoundaryPoint::finite(kI)) < 1e-14);
  CHECK(chordal_distance(b2.p2, BoundaryPoint::finite(-kI)) < 1e-14);
}

TEST_CASE("stabilizer directions push forward to zero") {
  SplitMix64 rng(63);
  for (int s = 0; s < 50; ++s) {
    PslElement a = random_psl(rng);
    Sl2Vector h1 = cartan_split(random_sl2(rng), Split::one).h_part;
    auto d1 = beta1_differential(a, h1);
    CHECK(std::abs(d1[0]) + std::abs(d1[1]) + std::abs(d1[2]) <
          1e-7 * (1 + h1.mat().frobenius()));
    Sl2Vector h2 = cartan_split(random_sl2(rng), Split::two).h_part;
    auto d2 = beta2_differential(a, h2);
    CHECK(std::abs(d2[0]) + std::abs(d2[1]) < 1e-7 * (1 + h2.mat().frobenius()));
  }
}

TEST_CASE("differential of beta1 at the identity, vertical direction") {
  // exp(t H/2) . j = e^t j in the quaternion model, so dbeta1(H/2) = (0,0,1)
  auto d = beta1_differential(PslElement(), kH * cplx(0.5));
  CHECK(std::abs(d[0]) < 1e-8);
  CHECK(std::abs(d[1]) < 1e-8);
  CHECK(std::abs(d[2] - 1.0) < 1e-7);
}

TEST_CASE("beta2 differential realizes the scaling value 4") {
  // V = [[0,1],[1,0]] lies in m_2; its image has squared length
  // 4 = 4 <V, V> under the geodesic-space metric.
  auto dv = beta2_differential(PslElement(), kX);
  cplx val = g_metric_value(beta2(PslElement()), dv, dv);
  CHECK(std::abs(val - cplx(4.0)) < 1e-6);
}

TEST_CASE("scaling isometry") {
  SplitMix64 rng(64);
  for (int s = 0; s < 5; ++s) {
    PslElement a = random_psl(rng);
    CHECK(scaling_isometry_check(Split::one, a, 700 + s, 10) < 1e-6);
    CHECK(scaling_isometry_check(Split::two, a, 800 + s, 10) < 1e-6);
  }
}

TEST_CASE("symmetric-space curvature formula") {
  SplitMix64 rng(65);
  for (Split which : {Split::one, Split::two})
    for (int s = 0; s < 5; ++s) {
      auto unit_m = [&] {
        for (;;) {
          Sl2Vector m = cartan_split(random_sl2(rng), which).m_part;
          double f = m.mat().frobenius();
          if (f > 1e-3) return m * cplx(1.0 / f);
        }
      };
      Sl2Vector u = unit_m(), v = unit_m(), w = unit_m();
      CHECK(symmetric_curvature_check(which, u, v, w) < 1e-6);
      CHECK(symmetric_curvature_check(which, u, v, v) < 1e-6);
    }
}

TEST_CASE("curvature of g_i is -4 at the base points") {
  for (Split which : {Split::one, Split::two}) {
    ChartMetric g = symmetric_space_metric(which);
    ChartPoint p = symmetric_space_base_coords(which);
    Coords u{}, v{};
    if (which == Split::one) {
      u[0] = 1.0;
      v[2] = 1.0;
    } else {
      u[0] = 1.0;
      u[1] = 1.0;
      v[0] = kI;
      v[1] = -kI;
    }
    CHECK(std::abs(sectional_curvature(g, p, u, v) - cplx(-4.0)) < 1e-4);
  }
}

TEST_CASE("wrong-subspace inputs are rejected") {
  CHECK_THROWS_AS(symmetric_curvature_check(Split::two, kJ, kX, kX), std::invalid_argument);
}
