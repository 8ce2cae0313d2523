#include <doctest.h>

#include "holoform/rng.hpp"
#include "holoform/sl2.hpp"

using namespace holoform;

namespace {
const cplx kI(0, 1);
const Sl2Vector kH(CMat2{1.0, 0.0, 0.0, -1.0});
const Sl2Vector kX(CMat2{0.0, 1.0, 1.0, 0.0});

Sl2Vector random_sl2(SplitMix64& rng) {
  return sl2_from_coefficients({rng.gauss_complex(), rng.gauss_complex(), rng.gauss_complex()});
}

PslElement random_psl(SplitMix64& rng, double scale = 0.5) {
  return exp_sl2(random_sl2(rng) * cplx(scale));
}
}  // namespace

TEST_CASE("type invariants are validated") {
  CHECK_THROWS_AS(Sl2Vector(CMat2{1.0, 0.0, 0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(PslElement(CMat2{2.0, 0.0, 0.0, 1.0}), std::invalid_argument);
}

TEST_CASE("bracket") {
  CHECK((bracket(kH, kX).mat() - CMat2{0.0, 2.0, -2.0, 0.0}).max_abs() == 0.0);
  SplitMix64 rng(21);
  for (int s = 0; s < 100; ++s) {
    Sl2Vector m = random_sl2(rng), n = random_sl2(rng), p = random_sl2(rng);
    CHECK(bracket(m, m).mat().max_abs() == 0.0);
    Sl2Vector jac = bracket(m, bracket(n, p)) + bracket(n, bracket(p, m)) +
                    bracket(p, bracket(m, n));
    CHECK(jac.mat().max_abs() < 1e-12 * (1 + m.mat().frobenius() * n.mat().frobenius() *
                                                 p.mat().frobenius()));
  }
}

TEST_CASE("killing form values and trace-of-ad oracle") {
  CHECK(killing(kH, kH) == cplx(8.0));
  Sl2Vector e(CMat2{0.0, 1.0, 0.0, 0.0});
  CHECK(killing(e, e) == cplx(0.0));

  // Kill(M,N) = tr(ad(M) ad(N)) with ad matrices built in sl2_basis()
  SplitMix64 rng(22);
  auto basis = sl2_basis();
  for (int s = 0; s < 100; ++s) {
    Sl2Vector m = random_sl2(rng), n = random_sl2(rng);
    std::array<std::array<cplx, 3>, 3> am{}, an{};
    for (int j = 0; j < 3; ++j) {
      auto cm = sl2_coefficients(bracket(m, basis[j]));
      auto cn = sl2_coefficients(bracket(n, basis[j]));
      for (int i = 0; i < 3; ++i) {
        am[i][j] = cm[i];
        an[i][j] = cn[i];
      }
    }
    cplx tr = 0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) tr += am[i][j] * an[j][i];
    CHECK(std::abs(killing(m, n) - tr) <
          1e-12 * (1 + m.mat().frobenius() * n.mat().frobenius()));
  }
}

TEST_CASE("rescaled metric values from the curvature proposition") {
  CHECK(hrm_metric(kH, kH) == cplx(1.0));
  CHECK(hrm_metric(kX, kX) == cplx(1.0));
  Sl2Vector hx = bracket(kH, kX);
  CHECK(hrm_metric(hx, hx) == cplx(-4.0));
}

TEST_CASE("orthonormal basis convention") {
  auto basis = sl2_basis();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(std::abs(hrm_metric(basis[i], basis[j]) - (i == j ? 1.0 : 0.0)) < 1e-15);
}

TEST_CASE("metric at group points: translation invariance") {
  SplitMix64 rng(23);
  PslElement id;
  for (int s = 0; s < 100; ++s) {
    Sl2Vector v = random_sl2(rng), w = random_sl2(rng);
    // identity base reduces to the algebra metric
    CHECK(std::abs(metric_at(id, {id, v.mat()}, {id, w.mat()}) - hrm_metric(v, w)) < 1e-15);

    PslElement a = random_psl(rng);
    CMat2 u1 = a.rep() * v.mat(), u2 = a.rep() * w.mat();
    cplx left = metric_at(a, {a, u1}, {a, u2});
    // right translation of the same tangents: (1/2) tr(U A^-1 V A^-1)
    CMat2 r1 = u1 * a.inverse().rep(), r2 = u2 * a.inverse().rep();
    cplx right = 0.5 * (r1 * r2).trace();
    CHECK(std::abs(left - right) < 1e-12 * (1 + std::abs(left)));
    CHECK(std::abs(left - hrm_metric(v, w)) < 1e-12 * (1 + std::abs(left)));
  }
}

TEST_CASE("metric_at rejects mismatched base points") {
  SplitMix64 rng(24);
  PslElement a = random_psl(rng), b = random_psl(rng);
  Sl2Vector v = random_sl2(rng);
  CHECK_THROWS_AS(metric_at(a, {a, a.rep() * v.mat()}, {b, b.rep() * v.mat()}),
                  std::invalid_argument);
}

TEST_CASE("two-sided action (A,B).C = A C B^-1 is isometric") {
  SplitMix64 rng(25);
  for (int s = 0; s < 100; ++s) {
    PslElement a = random_psl(rng), b = random_psl(rng), c = random_psl(rng);
    Sl2Vector v = random_sl2(rng), w = random_sl2(rng);
    CMat2 u1 = c.rep() * v.mat(), u2 = c.rep() * w.mat();
    cplx before = metric_at(c, {c, u1}, {c, u2});
    PslElement img = a * c * b.inverse();
    CMat2 d1 = a.rep() * u1 * b.inverse().rep();
    CMat2 d2 = a.rep() * u2 * b.inverse().rep();
    cplx after = metric_at(img, {img, d1}, {img, d2});
    CHECK(std::abs(before - after) < 1e-11 * (1 + std::abs(before)));
  }
}

TEST_CASE("closed-form exponential") {
  CHECK(psl_equal(exp_sl2(Sl2Vector()), PslElement(), 1e-15));
  double t = 0.7;
  PslElement e = exp_sl2(kH * cplx(t));
  CHECK((e.rep() - CMat2{std::exp(t), 0.0, 0.0, std::exp(-t)}).max_abs() < 1e-14);

  SplitMix64 rng(26);
  for (int s = 0; s < 100; ++s) {
    Sl2Vector m = random_sl2(rng);
    if (m.mat().frobenius() > 2.0) m = m * cplx(2.0 / m.mat().frobenius());
    CMat2 taylor = CMat2::identity(), term = CMat2::identity();
    for (int k = 1; k <= 20; ++k) {
      term = term * m.mat() * cplx(1.0 / k);
      taylor = taylor + term;
    }
    CHECK((exp_sl2(m).rep() - taylor).max_abs() < 1e-11);
    CHECK(std::abs(exp_sl2(m).rep().det() - 1.0) < 1e-10);
  }
}

TEST_CASE("adjoint action") {
  SplitMix64 rng(27);
  PslElement id;
  for (int s = 0; s < 100; ++s) {
    Sl2Vector m = random_sl2(rng), n = random_sl2(rng);
    CHECK((adjoint(id, m).mat() - m.mat()).max_abs() == 0.0);
    PslElement a = random_psl(rng);
    cplx before = killing(m, n);
    cplx after = killing(adjoint(a, m), adjoint(a, n));
    CHECK(std::abs(before - after) < 1e-11 * (1 + std::abs(before)));
    // ad = d(Ad): Ad(exp(tV)) M = M + t [V, M] + O(t^2)
    const double t = 1e-3;
    Sl2Vector v = random_sl2(rng);
    CMat2 lin = adjoint(exp_sl2(v * cplx(t)), m).mat() - m.mat() - bracket(v, m).mat() * cplx(t);
    CHECK(lin.max_abs() < 10 * t * t * v.mat().frobenius() * v.mat().frobenius() *
                              m.mat().frobenius());
  }
}

TEST_CASE("ad-invariance of the Killing form") {
  SplitMix64 rng(28);
  for (int s = 0; s < 500; ++s) {
    Sl2Vector u = random_sl2(rng), v = random_sl2(rng), w = random_sl2(rng);
    cplx r = killing(bracket(w, u), v) + killing(u, bracket(w, v));
    CHECK(std::abs(r) < 1e-11 * (1 + u.mat().frobenius() * v.mat().frobenius() *
                                         w.mat().frobenius()));
  }
}

TEST_CASE("sign-quotient equality") {
  SplitMix64 rng(29);
  PslElement a = random_psl(rng);
  PslElement neg(a.rep() * cplx(-1.0));
  CHECK(psl_equal(a, neg, 1e-12));
  CHECK(psl_equal(PslElement(), PslElement(CMat2{1.0 + 1e-15, 0.0, 0.0, 1.0}), 1e-12));
  CHECK(psl_equal(PslElement(CMat2{kI, 0.0, 0.0, -kI}), PslElement(CMat2{-kI, 0.0, 0.0, kI}),
                  1e-12));
  CHECK(!psl_equal(a, a * a * a, 1e-6));
}

TEST_CASE("exponential chart coordinates of one-parameter subgroups") {
  SplitMix64 rng(30);
  Sl2Vector v = random_sl2(rng);
  v = v * cplx(0.3 / v.mat().frobenius());
  auto c = sl2_coefficients(v);
  Coords x = sl2_chart_coords_of_exp(v, 2.0);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(x[i] - 2.0 * c[i]) < 1e-15);
}
