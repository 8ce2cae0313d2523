#include "holoform/suites.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "holoform/gspace.hpp"
#include "holoform/quadric.hpp"
#include "holoform/rng.hpp"
#include "holoform/sl2.hpp"
#include "holoform/symmetric.hpp"

namespace holoform {

namespace {

const cplx kI(0.0, 1.0);

Sl2Vector random_sl2(SplitMix64& rng, double scale = 1.0) {
  std::array<cplx, 3> c;
  for (auto& x : c) x = scale * rng.gauss_complex();
  return sl2_from_coefficients(c);
}

PslElement random_psl(SplitMix64& rng, double scale = 0.5) {
  return exp_sl2(random_sl2(rng, scale));
}

// Pair spanning a nondegenerate plane of (sl2, 1/8 Kill).
std::pair<Sl2Vector, Sl2Vector> random_plane(SplitMix64& rng) {
  for (;;) {
    Sl2Vector v = random_sl2(rng);
    Sl2Vector w = random_sl2(rng);
    cplx gram = hrm_metric(v, v) * hrm_metric(w, w) - hrm_metric(v, w) * hrm_metric(v, w);
    double scale = std::abs(hrm_metric(v, v) * hrm_metric(w, w)) +
                   std::abs(hrm_metric(v, w) * hrm_metric(v, w)) + 1e-30;
    if (std::abs(gram) > 1e-3 * scale) return {v, w};
  }
}

GeodesicLine random_line(SplitMix64& rng, double min_sep = 0.3) {
  for (;;) {
    cplx z1 = rng.gauss_complex();
    cplx z2 = rng.gauss_complex();
    if (std::abs(z1 - z2) > min_sep) return {BoundaryPoint::finite(z1), BoundaryPoint::finite(z2)};
  }
}

// 4th-order complex derivative along the real axis, step 1e-4.
cplx cdiff4(const std::function<cplx(cplx)>& f, cplx z) {
  const double h = 1e-4;
  return (-f(z + 2 * h) + 8.0 * f(z + h) - 8.0 * f(z - h) + f(z - 2 * h)) / (12.0 * h);
}

double relu(double x) { return x > 0 ? x : 0; }

// ---------------------------------------------------------------- lie

double res_jacobi(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector m = random_sl2(rng), p = random_sl2(rng), q = random_sl2(rng);
    CMat2 sum = bracket(m, bracket(p, q)).mat() + bracket(p, bracket(q, m)).mat() +
                bracket(q, bracket(m, p)).mat();
    worst = std::max(worst, sum.max_abs());
  }
  return worst;
}

double res_killing_ad_trace(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  auto basis = sl2_basis();
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector m = random_sl2(rng), p = random_sl2(rng);
    cplx tr = 0;
    for (int i = 0; i < 3; ++i)
      tr += sl2_coefficients(bracket(m, bracket(p, basis[i])))[i];
    worst = std::max(worst, std::abs(killing(m, p) - tr));
  }
  return worst;
}

double res_ad_invariance(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector u = random_sl2(rng), v = random_sl2(rng), w = random_sl2(rng);
    worst = std::max(worst, std::abs(killing(bracket(w, u), v) + killing(u, bracket(w, v))));
  }
  return worst;
}

double res_exp_taylor(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector m0 = random_sl2(rng);
    double target = 2.0 * rng.uniform();
    Sl2Vector m = m0 * cplx(target / std::max(m0.mat().frobenius(), 1e-12));
    CMat2 taylor = CMat2::identity();
    CMat2 term = CMat2::identity();
    double fact = 1;
    for (int k = 1; k <= 20; ++k) {
      term = term * m.mat();
      fact *= k;
      taylor = taylor + term * cplx(1.0 / fact);
    }
    worst = std::max(worst, (exp_sl2(m).rep() - taylor).max_abs());
  }
  return worst;
}

double res_adjoint_invariance(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    PslElement a = random_psl(rng);
    Sl2Vector m = random_sl2(rng), p = random_sl2(rng);
    worst = std::max(worst, std::abs(killing(adjoint(a, m), adjoint(a, p)) - killing(m, p)));
  }
  return worst;
}

// ||Ad(exp(tV)) M - M - t [V, M]|| / (||V||^2 ||M||), t = 1e-3; the bound
// 10 t^2 comes from the second-order remainder of Ad(exp(tV)).
double res_adjoint_linearization(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  const double t = 1e-3;
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector v = random_sl2(rng), m = random_sl2(rng);
    CMat2 lhs = adjoint(exp_sl2(v * cplx(t)), m).mat();
    CMat2 lin = m.mat() + bracket(v, m).mat() * cplx(t);
    double scale = v.mat().frobenius() * v.mat().frobenius() * m.mat().frobenius() + 1e-30;
    worst = std::max(worst, (lhs - lin).max_abs() / scale);
  }
  return worst;
}

double res_metric_left_right(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    PslElement a = random_psl(rng);
    Sl2Vector m = random_sl2(rng), p = random_sl2(rng);
    TangentAtGroup u{a, a.rep() * m.mat()};
    TangentAtGroup v{a, a.rep() * p.mat()};
    cplx left = metric_at(a, u, v);
    CMat2 ai = a.inverse().rep();
    cplx right = hrm_metric(Sl2Vector(u.vec * ai, 1e-8), Sl2Vector(v.vec * ai, 1e-8));
    worst = std::max(worst, std::abs(left - right));
  }
  return worst;
}

double res_basis_orthonormal(uint64_t, int) {
  auto basis = sl2_basis();
  double worst = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      worst = std::max(worst,
                       std::abs(hrm_metric(basis[i], basis[j]) - (i == j ? cplx(1) : cplx(0))));
  return worst;
}

// ---------------------------------------------------------------- psl curvature

double res_bracket_norm(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector v = random_sl2(rng), w = random_sl2(rng);
    cplx lhs = hrm_metric(bracket(v, w), bracket(v, w));
    cplx rhs = -4.0 * hrm_metric(v, v) * hrm_metric(w, w) +
               4.0 * hrm_metric(v, w) * hrm_metric(v, w);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return worst;
}

double res_algebraic_sectional(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    auto [v, w] = random_plane(rng);
    // R(V,W)W = -1/4 [[V,W],W]
    Sl2Vector rw = bracket(bracket(v, w), w) * cplx(-0.25);
    cplx gram = hrm_metric(v, v) * hrm_metric(w, w) - hrm_metric(v, w) * hrm_metric(v, w);
    cplx k = hrm_metric(rw, v) / gram;
    worst = std::max(worst, std::abs(k + 1.0));
  }
  return worst;
}

double res_chart_sectional(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g = sl2_group_chart();
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    ChartPoint p;
    p.dim = 3;
    for (int i = 0; i < 3; ++i) p.x[i] = 0.2 * rng.gauss_complex();
    for (;;) {
      Coords u{}, v{};
      for (int i = 0; i < 3; ++i) {
        u[i] = rng.gauss_complex();
        v[i] = rng.gauss_complex();
      }
      try {
        cplx k = sectional_curvature(g, p, u, v);
        worst = std::max(worst, std::abs(k + 1.0));
        break;
      } catch (const DegeneratePlaneError&) {
        continue;
      }
    }
  }
  return worst;
}

double res_isometry_action(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    PslElement a = random_psl(rng), b = random_psl(rng), c = random_psl(rng);
    Sl2Vector m = random_sl2(rng), p = random_sl2(rng);
    TangentAtGroup u{c, c.rep() * m.mat()};
    TangentAtGroup v{c, c.rep() * p.mat()};
    cplx before = metric_at(c, u, v);
    PslElement img = a * c * b.inverse();
    CMat2 bi = b.inverse().rep();
    TangentAtGroup ui{img, a.rep() * u.vec * bi};
    TangentAtGroup vi{img, a.rep() * v.vec * bi};
    worst = std::max(worst, std::abs(metric_at(img, ui, vi) - before));
  }
  return worst;
}

double res_one_param_ode(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g = sl2_group_chart();
  const double h = 1e-3;
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector v = random_sl2(rng, 0.25);
    Coords vc = sl2_chart_coords_of_exp(v, 1.0);
    for (int step = -4; step <= 4; ++step) {
      double t = 0.1 * step;
      ChartPoint p;
      p.dim = 3;
      Coords acc{};
      for (int i = 0; i < 3; ++i) {
        p.x[i] = t * vc[i];
        // m(t) = t * v is linear, so the FD second derivative is pure noise
        acc[i] = ((t + h) * vc[i] - 2.0 * t * vc[i] + (t - h) * vc[i]) / (h * h);
      }
      Christoffels gm = christoffels(g, p);
      for (int k = 0; k < 3; ++k) {
        cplx sgam = 0;
        for (int i = 0; i < 3; ++i)
          for (int j = 0; j < 3; ++j) sgam += gm.gamma[k][i][j] * vc[i] * vc[j];
        worst = std::max(worst, std::abs(acc[k] + sgam));
      }
    }
  }
  return worst;
}

double res_geodesic_exp_match(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g = sl2_group_chart();
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector v = random_sl2(rng, 0.25);
    Coords v0 = sl2_chart_coords_of_exp(v, 1.0);
    ChartPoint p0;
    p0.dim = 3;
    Trajectory tr = geodesic_integrate(g, p0, v0, 1.0, 1e-2);
    const auto& last = tr.samples.back();
    Coords expect = sl2_chart_coords_of_exp(v, last.t);
    for (int i = 0; i < 3; ++i)
      worst = std::max(worst, std::abs(last.x.x[i] - expect[i]));
  }
  return worst;
}

double res_geodesic_energy(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g = sl2_group_chart();
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector v = random_sl2(rng, 0.25);
    cplx e0 = hrm_metric(v, v);
    if (std::abs(e0) < 0.05) continue;  // near-isotropic velocity, energy ratio ill-scaled
    Coords v0 = sl2_chart_coords_of_exp(v, 1.0);
    ChartPoint p0;
    p0.dim = 3;
    Trajectory tr = geodesic_integrate(g, p0, v0, 1.0, 1e-2);
    for (const auto& sample : tr.samples) {
      cplx e = metric_eval(g, sample.x, sample.v, sample.v);
      worst = std::max(worst, std::abs(e - e0) / std::abs(e0));
    }
  }
  return worst;
}

double curvature_symmetry_residual(const ChartMetric& g, const ChartPoint& p, SplitMix64& rng) {
  std::array<Coords, 4> v{};
  for (auto& c : v)
    for (int i = 0; i < g.dim; ++i) c[i] = rng.gauss_complex();
  cplx r1234 = curvature_tensor(g, p, v[0], v[1], v[2], v[3]);
  cplx r2134 = curvature_tensor(g, p, v[1], v[0], v[2], v[3]);
  cplx r1243 = curvature_tensor(g, p, v[0], v[1], v[3], v[2]);
  cplx r3412 = curvature_tensor(g, p, v[2], v[3], v[0], v[1]);
  return std::max({std::abs(r1234 + r2134), std::abs(r1234 + r1243), std::abs(r1234 - r3412)});
}

double res_psl_curvature_symmetries(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g = sl2_group_chart();
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    ChartPoint p;
    p.dim = 3;
    for (int i = 0; i < 3; ++i) p.x[i] = 0.2 * rng.gauss_complex();
    worst = std::max(worst, curvature_symmetry_residual(g, p, rng));
  }
  return worst;
}

// ---------------------------------------------------------------- g space

ChartPoint line_point(const GeodesicLine& l) { return {l.p1.z, l.p2.z}; }

double res_g_sectional(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g = g_chart_metric();
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    GeodesicLine line = random_line(rng);
    for (;;) {
      Coords u{rng.gauss_complex(), rng.gauss_complex()};
      Coords v{rng.gauss_complex(), rng.gauss_complex()};
      try {
        cplx k = sectional_curvature(g, line_point(line), u, v);
        worst = std::max(worst, std::abs(k + 1.0));
        break;
      } catch (const DegeneratePlaneError&) {
        continue;
      }
    }
  }
  return worst;
}

double res_g_invariance(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g = g_chart_metric();
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    // draw until the Mobius image stays comfortably inside the affine chart
    PslElement a;
    GeodesicLine line = random_line(rng);
    GeodesicLine img = line;
    for (;;) {
      a = random_psl(rng, 0.3);
      line = random_line(rng);
      const CMat2& m = a.rep();
      double d1 = std::abs(m.c * line.p1.z + m.d);
      double d2 = std::abs(m.c * line.p2.z + m.d);
      if (d1 < 0.4 || d2 < 0.4) continue;
      img = g_action(a, line);
      if (img.p1.infinite || img.p2.infinite) continue;
      if (std::abs(img.p1.z - img.p2.z) < 0.05) continue;
      break;
    }
    Coords u{rng.gauss_complex(), rng.gauss_complex()};
    Coords v{rng.gauss_complex(), rng.gauss_complex()};
    auto mob = [&a](cplx z) { return mobius_apply(a, BoundaryPoint::finite(z)).z; };
    cplx d1 = cdiff4(mob, line.p1.z);
    cplx d2 = cdiff4(mob, line.p2.z);
    Coords ui{u[0] * d1, u[1] * d2};
    Coords vi{v[0] * d1, v[1] * d2};
    cplx before = metric_eval(g, line_point(line), u, v);
    cplx after = metric_eval(g, line_point(img), ui, vi);
    worst = std::max(worst, std::abs(before - after));
  }
  return worst;
}

double res_g_holomorphy(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g = g_chart_metric();
  double worst = 0;
  // Separation >= 0.5 and h = 1e-6: the components scale like the inverse
  // square of the separation, so close endpoints inflate the truncation
  // term of the Cauchy-Riemann estimate past the certification threshold.
  for (int s = 0; s < n; ++s)
    worst = std::max(worst, holomorphy_residual(g, line_point(random_line(rng, 0.5)), 1e-6));
  return worst;
}

double res_mobius_composition(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    PslElement a = random_psl(rng), b = random_psl(rng);
    BoundaryPoint p = (s % 7 == 0) ? BoundaryPoint::infinity()
                                   : BoundaryPoint::finite(rng.gauss_complex());
    BoundaryPoint lhs = mobius_apply(a * b, p);
    BoundaryPoint rhs = mobius_apply(a, mobius_apply(b, p));
    worst = std::max(worst, chordal_distance(lhs, rhs));
  }
  return worst;
}

double res_g_curvature_symmetries(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g = g_chart_metric();
  double worst = 0;
  // Separation >= 0.5: near-diagonal lines blow up the component scale and
  // with it the finite-difference noise floor of the symmetry residual.
  for (int s = 0; s < n; ++s)
    worst = std::max(worst, curvature_symmetry_residual(g, line_point(random_line(rng, 0.5)), rng));
  return worst;
}

// ---------------------------------------------------------------- quadrics

double res_quadric_sample(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    worst = std::max(worst, quadric_sample(rng, 2).residual);
    worst = std::max(worst, quadric_sample(rng, 3).residual);
  }
  return worst;
}

double res_quadric_frame_tangency(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    QuadricFrame f = quadric_frame(quadric_sample(rng, (s % 2) ? 3 : 2));
    for (const auto& v : f.vectors)
      worst = std::max(worst, std::abs(bilinear_cn(f.base.z, v)));
  }
  return worst;
}

double res_quadric_frame_gram(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double shortfall = 0;
  for (int s = 0; s < n; ++s) {
    QuadricFrame f = quadric_frame(quadric_sample(rng, (s % 2) ? 3 : 2));
    int m = static_cast<int>(f.vectors.size());
    SmallMat gram(m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) gram(i, j) = bilinear_cn(f.vectors[i], f.vectors[j]);
    shortfall = std::max(shortfall, relu(1e-6 - std::abs(gram.det())));
  }
  return shortfall;
}

double res_flat_model(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int dim : {2, 3}) {
    ChartMetric g = flat_chart(dim);
    for (int s = 0; s < std::max(1, n / 4); ++s) {
      ChartPoint p;
      p.dim = dim;
      for (int i = 0; i < dim; ++i) p.x[i] = rng.gauss_complex();
      Christoffels gm = christoffels(g, p);
      for (int k = 0; k < dim; ++k)
        for (int i = 0; i < dim; ++i)
          for (int j = 0; j < dim; ++j) worst = std::max(worst, std::abs(gm.gamma[k][i][j]));
      std::array<Coords, 4> v{};
      for (auto& c : v)
        for (int i = 0; i < dim; ++i) c[i] = rng.gauss_complex();
      worst = std::max(worst, std::abs(curvature_tensor(g, p, v[0], v[1], v[2], v[3])));
    }
  }
  return worst;
}

double quadric_sectional_residual(SplitMix64& rng, int n_quadric, cplx scale, cplx expected_k,
                                  bool relative) {
  QuadricPoint p = quadric_sample(rng, n_quadric);
  ChartMetric g = quadric_chart(p, scale);
  ChartPoint c = quadric_chart_center(p);
  const int dim = n_quadric;
  for (;;) {
    Coords u{}, v{};
    for (int i = 0; i < dim; ++i) {
      u[i] = rng.gauss_complex();
      v[i] = rng.gauss_complex();
    }
    try {
      cplx k = sectional_curvature(g, c, u, v);
      double r = std::abs(k - expected_k);
      return relative ? r / std::abs(expected_k) : r;
    } catch (const DegeneratePlaneError&) {
      continue;
    }
  }
}

double res_x2_sectional(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s)
    worst = std::max(worst, quadric_sectional_residual(rng, 2, 1.0, -1.0, false));
  return worst;
}

double res_x3_sectional(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s)
    worst = std::max(worst, quadric_sectional_residual(rng, 3, 1.0, -1.0, false));
  return worst;
}

double res_quadric_scaling(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  const std::array<cplx, 3> ks = {cplx(-4.0), cplx(-1.0), cplx(0.0, 2.0)};
  double worst = 0;
  for (int s = 0; s < std::max(1, n / 3); ++s)
    for (cplx k : ks)
      worst = std::max(worst, quadric_sectional_residual(rng, 2, -1.0 / k, k, true));
  return worst;
}

double res_quadric_holomorphy(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    QuadricPoint p = quadric_sample(rng, (s % 2) ? 3 : 2);
    // h = 1e-6: chart components have large third derivatives when the
    // solved-for coordinate is small, so truncation dominates roundoff here
    worst = std::max(
        worst, holomorphy_residual(quadric_chart(p, 1.0), quadric_chart_center(p), 1e-6));
  }
  return worst;
}

double res_f_quadratic(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    CVec z(4);
    for (int i = 0; i < 4; ++i) z[i] = rng.gauss_complex();
    CMat2 f = f_map(z);
    worst = std::max(worst, std::abs(mat2_bilinear(f, f) - bilinear_cn(z, z)));
  }
  return worst;
}

double res_f_linearity(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    CVec z(4), w(4);
    for (int i = 0; i < 4; ++i) {
      z[i] = rng.gauss_complex();
      w[i] = rng.gauss_complex();
    }
    cplx lam = rng.gauss_complex();
    CMat2 lhs = f_map(z * lam + w);
    CMat2 rhs = f_map(z) * lam + f_map(w);
    worst = std::max(worst, (lhs - rhs).max_abs());
  }
  return worst;
}

double res_f_polarized(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    CVec z(4), w(4);
    for (int i = 0; i < 4; ++i) {
      z[i] = rng.gauss_complex();
      w[i] = rng.gauss_complex();
    }
    worst = std::max(worst, std::abs(mat2_bilinear(f_map(z), f_map(w)) - bilinear_cn(z, w)));
  }
  return worst;
}

double res_x3_image_det(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s)
    worst = std::max(worst, std::abs(x3_to_sl2(quadric_sample(rng, 3)).rep().det() - 1.0));
  return worst;
}

double res_x2_slice_tracefree(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    QuadricPoint p2 = quadric_sample(rng, 2);
    CVec z(4);
    for (int i = 0; i < 3; ++i) z[i] = p2.z[i];
    z[3] = 0.0;
    worst = std::max(worst, std::abs(f_map(z).trace()));
  }
  return worst;
}

// ---------------------------------------------------------------- rot pi

GeodesicLine random_line_maybe_infinite(SplitMix64& rng, int s) {
  if (s % 5 == 4) {
    cplx z = rng.gauss_complex();
    return (s % 2) ? GeodesicLine{BoundaryPoint::finite(z), BoundaryPoint::infinity()}
                   : GeodesicLine{BoundaryPoint::infinity(), BoundaryPoint::finite(z)};
  }
  return random_line(rng, 0.1);
}

double res_rotpi_q_membership(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    PslElement m = rot_pi(random_line_maybe_infinite(rng, s));
    if (!q_membership(m, 1e-6)) return 1.0;  // hard failure sentinel
    worst = std::max(worst, std::abs(m.rep().trace()));
    worst = std::max(worst, std::abs(m.rep().det() - 1.0));
  }
  return worst;
}

double res_rotpi_square(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    PslElement m = rot_pi(random_line_maybe_infinite(rng, s));
    worst = std::max(worst, psl_distance(m * m, PslElement()));
  }
  return worst;
}

double res_rotpi_equivariance(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    GeodesicLine line = random_line(rng, 0.1);
    PslElement a = random_psl(rng, 0.4);
    PslElement lhs = rot_pi(g_action(a, line));
    PslElement rhs = a * rot_pi(line) * a.inverse();
    worst = std::max(worst, psl_distance(lhs, rhs));
  }
  return worst;
}

double res_rotpi_orientation(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    GeodesicLine line = random_line_maybe_infinite(rng, s);
    worst = std::max(worst, psl_distance(rot_pi(line), rot_pi(line.reversed())));
  }
  return worst;
}

double res_rotpi_local_isometry(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    GeodesicLine line = random_line(rng, 0.3);
    worst = std::max(worst, rot_pi_pullback_check(line, rng.next()));
  }
  return worst;
}

// ---------------------------------------------------------------- symmetric spaces

H3Point random_h3(SplitMix64& rng) {
  return {rng.gauss(), rng.gauss(), std::exp(0.4 * rng.gauss())};
}

double res_h3_sectional(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g = h3_metric_chart();
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    H3Point p = random_h3(rng);
    ChartPoint c{p.x, p.y, p.t};
    for (;;) {
      Coords u{rng.gauss(), rng.gauss(), rng.gauss()};
      Coords v{rng.gauss(), rng.gauss(), rng.gauss()};
      try {
        cplx k = sectional_curvature(g, c, u, v);
        worst = std::max(worst, std::abs(k + 1.0));
        break;
      } catch (const DegeneratePlaneError&) {
        continue;
      }
    }
  }
  return worst;
}

double res_h3_action_isometry(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g = h3_metric_chart();
  const double h = 1e-5;
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    PslElement a = random_psl(rng, 0.4);
    H3Point p = random_h3(rng);
    // FD Jacobian of the action in half-space coordinates
    double jac[3][3];
    for (int j = 0; j < 3; ++j) {
      double base[3] = {p.x, p.y, p.t};
      double plus[3] = {base[0], base[1], base[2]};
      double minus[3] = {base[0], base[1], base[2]};
      plus[j] += h;
      minus[j] -= h;
      H3Point pp = h3_action(a, {plus[0], plus[1], plus[2]});
      H3Point pm = h3_action(a, {minus[0], minus[1], minus[2]});
      jac[0][j] = (pp.x - pm.x) / (2 * h);
      jac[1][j] = (pp.y - pm.y) / (2 * h);
      jac[2][j] = (pp.t - pm.t) / (2 * h);
    }
    Coords u{rng.gauss(), rng.gauss(), rng.gauss()};
    Coords v{rng.gauss(), rng.gauss(), rng.gauss()};
    Coords ju{}, jv{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        ju[i] += jac[i][j] * u[j];
        jv[i] += jac[i][j] * v[j];
      }
    H3Point q = h3_action(a, p);
    cplx before = metric_eval(g, {p.x, p.y, p.t}, u, v);
    cplx after = metric_eval(g, {q.x, q.y, q.t}, ju, jv);
    worst = std::max(worst, std::abs(before - after));
  }
  return worst;
}

double res_cartan_brackets(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    for (Split which : {Split::one, Split::two}) {
      CartanSplit a = cartan_split(random_sl2(rng), which);
      CartanSplit b = cartan_split(random_sl2(rng), which);
      // [m, m] subset h and [h, m] subset m: the wrong component vanishes
      Sl2Vector mm = bracket(a.m_part, b.m_part);
      Sl2Vector hm = bracket(a.h_part, b.m_part);
      worst = std::max(worst, cartan_split(mm, which).m_part.mat().max_abs());
      worst = std::max(worst, cartan_split(hm, which).h_part.mat().max_abs());
    }
  }
  return worst;
}

double res_cartan_reconstruction(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector v = random_sl2(rng);
    for (Split which : {Split::one, Split::two}) {
      CartanSplit c = cartan_split(v, which);
      worst = std::max(worst, (c.h_part.mat() + c.m_part.mat() - v.mat()).max_abs());
    }
  }
  return worst;
}

double res_beta_equivariance(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    PslElement a = random_psl(rng), b = random_psl(rng);
    H3Point lhs1 = beta1(a * b);
    H3Point rhs1 = h3_action(a, beta1(b));
    worst = std::max(worst, std::abs(lhs1.x - rhs1.x));
    worst = std::max(worst, std::abs(lhs1.y - rhs1.y));
    worst = std::max(worst, std::abs(lhs1.t - rhs1.t));
    GeodesicLine lhs2 = beta2(a * b);
    GeodesicLine rhs2 = g_action(a, beta2(b));
    worst = std::max(worst, chordal_distance(lhs2.p1, rhs2.p1));
    worst = std::max(worst, chordal_distance(lhs2.p2, rhs2.p2));
  }
  return worst;
}

double res_stabilizer_differential(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  PslElement id;
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector h1 = cartan_split(random_sl2(rng), Split::one).h_part;
    auto d1 = beta1_differential(id, h1);
    worst = std::max(worst, std::max({std::abs(d1[0]), std::abs(d1[1]), std::abs(d1[2])}));
    Sl2Vector h2 = cartan_split(random_sl2(rng), Split::two).h_part;
    auto d2 = beta2_differential(id, h2);
    worst = std::max(worst, std::max(std::abs(d2[0]), std::abs(d2[1])));
  }
  return worst;
}

// Stabilizer elements of the fixed base points: exp(h_i) fixes x_i.
PslElement random_stab(SplitMix64& rng, Split which) {
  return exp_sl2(cartan_split(random_sl2(rng, 0.5), which).h_part);
}

double res_dbeta_ad_equivariance(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  PslElement id;
  const double h = 1e-5;
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    // which = one
    {
      PslElement a = random_stab(rng, Split::one);
      Sl2Vector v = cartan_split(random_sl2(rng), Split::one).m_part;
      auto lhs = beta1_differential(id, adjoint(a, v));
      auto dv = beta1_differential(id, v);
      // push dv by the differential of the action of a at the base point
      std::array<double, 3> rhs{};
      double base[3] = {0, 0, 1};
      for (int j = 0; j < 3; ++j) {
        double plus[3] = {base[0], base[1], base[2]};
        double minus[3] = {base[0], base[1], base[2]};
        plus[j] += h;
        minus[j] -= h;
        H3Point pp = h3_action(a, {plus[0], plus[1], plus[2]});
        H3Point pm = h3_action(a, {minus[0], minus[1], minus[2]});
        rhs[0] += (pp.x - pm.x) / (2 * h) * dv[j];
        rhs[1] += (pp.y - pm.y) / (2 * h) * dv[j];
        rhs[2] += (pp.t - pm.t) / (2 * h) * dv[j];
      }
      for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    }
    // which = two
    {
      PslElement a = random_stab(rng, Split::two);
      Sl2Vector v = cartan_split(random_sl2(rng), Split::two).m_part;
      auto lhs = beta2_differential(id, adjoint(a, v));
      auto dv = beta2_differential(id, v);
      // a fixes the base line (i, -i) pointwise, so its action stays in
      // the finite chart near both endpoints; differentials by complex FD
      auto act = [&a](cplx z) { return mobius_apply(a, BoundaryPoint::finite(z)).z; };
      GeodesicLine x2 = base_line();
      cplx d1 = cdiff4(act, x2.p1.z);
      cplx d2 = cdiff4(act, x2.p2.z);
      std::array<cplx, 2> rhs{d1 * dv[0], d2 * dv[1]};
      worst = std::max(worst, std::abs(lhs[0] - rhs[0]));
      worst = std::max(worst, std::abs(lhs[1] - rhs[1]));
    }
  }
  return worst;
}

double res_scaling_isometry_h3(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  const int batches = std::max(1, n / 5);
  for (int s = 0; s < batches; ++s) {
    PslElement a = (s == 0) ? PslElement() : random_psl(rng, 0.4);
    worst = std::max(worst, scaling_isometry_check(Split::one, a, rng.next(), 5));
  }
  return worst;
}

double res_scaling_isometry_g(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  const int batches = std::max(1, n / 5);
  for (int s = 0; s < batches; ++s) {
    PslElement a = (s == 0) ? PslElement() : random_psl(rng, 0.4);
    worst = std::max(worst, scaling_isometry_check(Split::two, a, rng.next(), 5));
  }
  return worst;
}

// Unit-Frobenius m_i directions: keeps the double bracket O(1) so the
// absolute residual tolerance is meaningful.
Sl2Vector random_m_unit(SplitMix64& rng, Split which) {
  for (;;) {
    Sl2Vector m = cartan_split(random_sl2(rng), which).m_part;
    double f = m.mat().frobenius();
    if (f > 1e-3) return m * cplx(1.0 / f);
  }
}

double res_gi_well_posed(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    for (Split which : {Split::one, Split::two}) {
      // Keep the moved base point at moderate coordinates: extreme Mobius
      // images raise the roundoff floor of the finite differences past the
      // comparison tolerance.
      PslElement a, stab;
      for (;;) {
        a = random_psl(rng, 0.4);
        stab = random_stab(rng, which);
        if (which == Split::one) {
          H3Point p = beta1(a);
          if (std::abs(p.x) < 10 && std::abs(p.y) < 10 && p.t > 0.1 && p.t < 10) break;
        } else {
          GeodesicLine line = beta2(a);
          GChartPair chart = g_chart_of(line);
          cplx c1 = boundary_coordinate(line.p1, chart.w1);
          cplx c2 = boundary_coordinate(line.p2, chart.w2);
          if (std::abs(c1) < 10 && std::abs(c2) < 10 && chordal_distance(line.p1, line.p2) > 0.3)
            break;
        }
      }
      PslElement b = a * stab;
      Sl2Vector v = random_m_unit(rng, which);
      Sl2Vector w = random_m_unit(rng, which);
      // B = A S with S in Stab(x_i); the direction V' = Ad(S^-1) V satisfies
      // d beta_B (V') = d beta_A (V), so the two pushforward definitions of
      // g_i agree iff <V', W'> = <V, W>.
      Sl2Vector vp = adjoint(stab.inverse(), v);
      Sl2Vector wp = adjoint(stab.inverse(), w);
      worst = std::max(worst, cartan_split(vp, which).h_part.mat().max_abs());
      worst = std::max(worst, std::abs(hrm_metric(vp, wp) - hrm_metric(v, w)));
      // The pushforward comparison is relative to the differential
      // magnitude: the Mobius derivative of A can be large and sets the
      // roundoff floor of the finite differences.
      if (which == Split::one) {
        auto ua = beta1_differential(a, v);
        auto ub = beta1_differential(b, vp);
        double scale = std::max({1.0, std::abs(ua[0]), std::abs(ua[1]), std::abs(ua[2])});
        for (int i = 0; i < 3; ++i) worst = std::max(worst, std::abs(ua[i] - ub[i]) / scale);
      } else {
        auto ua = beta2_differential(a, v);
        auto ub = beta2_differential(b, vp);
        double scale = std::max({1.0, std::abs(ua[0]), std::abs(ua[1])});
        worst = std::max(worst, std::abs(ua[0] - ub[0]) / scale);
        worst = std::max(worst, std::abs(ua[1] - ub[1]) / scale);
      }
    }
  }
  return worst;
}

double res_m1_positive_definite(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector v = cartan_split(random_sl2(rng), Split::one).m_part;
    if (v.mat().frobenius() < 1e-3) continue;
    cplx h = hrm_metric(v, v);
    worst = std::max(worst, std::abs(h.imag()));
    worst = std::max(worst, relu(-h.real()));
  }
  return worst;
}

double res_m2_orthonormal(uint64_t, int) {
  Sl2Vector e1(CMat2{0.0, 1.0, 1.0, 0.0});
  Sl2Vector e2(CMat2{0.0, -kI, kI, 0.0});
  double worst = 0;
  worst = std::max(worst, std::abs(hrm_metric(e1, e1) - 1.0));
  worst = std::max(worst, std::abs(hrm_metric(e2, e2) - 1.0));
  worst = std::max(worst, std::abs(hrm_metric(e1, e2)));
  return worst;
}

double res_symmetric_curvature(uint64_t seed, int n, Split which) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    Sl2Vector u = random_m_unit(rng, which);
    Sl2Vector v = random_m_unit(rng, which);
    Sl2Vector w = random_m_unit(rng, which);
    worst = std::max(worst, symmetric_curvature_check(which, u, v, w));
  }
  return worst;
}

double res_symmetric_curvature_h3(uint64_t seed, int n) {
  return res_symmetric_curvature(seed, n, Split::one);
}
double res_symmetric_curvature_g(uint64_t seed, int n) {
  return res_symmetric_curvature(seed, n, Split::two);
}

double res_g2_sectional(uint64_t seed, int n) {
  SplitMix64 rng(seed);
  ChartMetric g2 = symmetric_space_metric(Split::two);
  ChartPoint base = symmetric_space_base_coords(Split::two);
  double worst = 0;
  for (int s = 0; s < n; ++s) {
    for (;;) {
      Coords u{rng.gauss_complex(), rng.gauss_complex()};
      Coords v{rng.gauss_complex(), rng.gauss_complex()};
      try {
        cplx k = sectional_curvature(g2, base, u, v);
        worst = std::max(worst, std::abs(k + 4.0));
        break;
      } catch (const DegeneratePlaneError&) {
        continue;
      }
    }
  }
  return worst;
}

// The full curvature chain on orthonormal pairs of m_i, in the kernel's
// conventions (R13 is the chart curvature whose metric pairing over the
// Gram determinant is the sectional curvature):
//   -1 = K(Span(V,W)) = -1/4 <[[V,W],W], V>
//      = 1/4 g_i(R13(Vx,Wx)Wx, Vx) = 1/4 K^{X_i},
// where the middle equality uses R13(Vx,Wx)Wx = -[[V,W],W]x and the
// isometry g_i(Ux, Vx) = <U, V>. Every adjacent equality is checked.
double res_curvature_chain(uint64_t, int) {
  double worst = 0;
  for (Split which : {Split::one, Split::two}) {
    // Orthonormal pairs inside the respective m_i (both Hermitian for one,
    // both symmetric for two).
    Sl2Vector v(CMat2{1.0, 0.0, 0.0, -1.0});
    Sl2Vector w(CMat2{0.0, 1.0, 1.0, 0.0});
    if (which == Split::two) {
      v = Sl2Vector(CMat2{0.0, 1.0, 1.0, 0.0});
      w = Sl2Vector(CMat2{1.0, 0.0, 0.0, -1.0});
    }
    cplx t1 = hrm_metric(bracket(bracket(v, w), w) * cplx(-0.25), v);  // <R(V,W)W, V>
    cplx t2 = -0.25 * hrm_metric(bracket(bracket(v, w), w), v);

    ChartMetric gi = symmetric_space_metric(which);
    ChartPoint base = symmetric_space_base_coords(which);
    PslElement id;
    auto push = [&](const Sl2Vector& m) -> Coords {
      if (which == Split::one) {
        auto d = beta1_differential(id, m);
        return {d[0], d[1], d[2], 0.0};
      }
      auto d = beta2_differential(id, m);
      return {d[0], d[1], 0.0, 0.0};
    };
    Coords vx = push(v), wx = push(w);
    Coords rx = curvature_13(gi, base, vx, wx, wx);
    cplx t3 = 0.25 * metric_eval(gi, base, rx, vx);
    cplx k_xi = sectional_curvature(gi, base, vx, wx);
    cplx t4 = 0.25 * k_xi;

    worst = std::max({worst, std::abs(t1 + 1.0), std::abs(t1 - t2), std::abs(t2 - t3),
                      std::abs(t3 - t4), std::abs(t4 + 1.0)});
  }
  return worst;
}

// ---------------------------------------------------------------- registry

uint64_t fnv1a(const std::string& s) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

const std::vector<std::pair<std::string, std::vector<CheckSpec>>>& suite_registry() {
  static const std::vector<std::pair<std::string, std::vector<CheckSpec>>> reg = {
      {"lie-identities",
       {
           {"jacobi-identity", 1e-12, res_jacobi},
           {"killing-ad-trace", 1e-12, res_killing_ad_trace},
           {"ad-invariance", 1e-11, res_ad_invariance},
           {"exp-taylor-agreement", 1e-11, res_exp_taylor},
           {"adjoint-killing-invariance", 1e-11, res_adjoint_invariance},
           {"adjoint-linearization", 1e-5, res_adjoint_linearization},
           {"metric-left-right-translation", 1e-12, res_metric_left_right},
           {"basis-orthonormality", 1e-14, res_basis_orthonormal},
       }},
      {"psl-curvature",
       {
           {"bracket-norm-identity", 1e-10, res_bracket_norm},
           {"algebraic-sectional-curvature", 1e-9, res_algebraic_sectional},
           {"chart-sectional-curvature", 1e-5, res_chart_sectional},
           {"isometry-action-invariance", 1e-11, res_isometry_action},
           {"one-parameter-geodesic-ode", 1e-6, res_one_param_ode},
           {"geodesic-exp-match", 1e-6, res_geodesic_exp_match},
           {"geodesic-energy-conservation", 1e-8, res_geodesic_energy},
           {"curvature-symmetries", 1e-8, res_psl_curvature_symmetries},
       }},
      {"g-space",
       {
           {"g-sectional-curvature", 1e-6, res_g_sectional},
           {"g-psl-invariance", 1e-9, res_g_invariance},
           {"g-holomorphy", 1e-8, res_g_holomorphy},
           {"mobius-composition", 1e-10, res_mobius_composition},
           {"g-curvature-symmetries", 1e-8, res_g_curvature_symmetries},
       }},
      {"quadrics",
       {
           {"quadric-sample-residual", 1e-12, res_quadric_sample},
           {"quadric-frame-tangency", 1e-10, res_quadric_frame_tangency},
           {"quadric-frame-nondegeneracy", 1e-12, res_quadric_frame_gram},
           {"flat-model-zero", 1e-10, res_flat_model},
           {"x2-sectional-curvature", 1e-5, res_x2_sectional},
           {"x3-sectional-curvature", 1e-5, res_x3_sectional},
           {"quadric-scaling-law", 1e-5, res_quadric_scaling},
           {"quadric-holomorphy", 1e-8, res_quadric_holomorphy},
           {"f-quadratic-preservation", 1e-13, res_f_quadratic},
           {"f-linearity", 1e-14, res_f_linearity},
           {"f-pullback-polarized", 1e-13, res_f_polarized},
           {"x3-image-determinant", 1e-10, res_x3_image_det},
           {"x2-slice-tracefree", 1e-12, res_x2_slice_tracefree},
       }},
      {"rotpi-cover",
       {
           {"rotpi-q-membership", 1e-10, res_rotpi_q_membership},
           {"rotpi-square-identity", 1e-9, res_rotpi_square},
           {"rotpi-equivariance", 1e-9, res_rotpi_equivariance},
           {"rotpi-orientation-reversal", 1e-9, res_rotpi_orientation},
           {"rotpi-local-isometry", 1e-7, res_rotpi_local_isometry},
       }},
      {"symmetric-scaling",
       {
           {"h3-sectional-curvature", 1e-7, res_h3_sectional},
           {"h3-action-isometry", 1e-8, res_h3_action_isometry},
           {"cartan-bracket-relations", 1e-12, res_cartan_brackets},
           {"cartan-reconstruction", 1e-13, res_cartan_reconstruction},
           {"beta-equivariance", 1e-10, res_beta_equivariance},
           {"stabilizer-differential", 1e-8, res_stabilizer_differential},
           {"dbeta-ad-equivariance", 1e-8, res_dbeta_ad_equivariance},
           {"scaling-isometry-h3", 1e-6, res_scaling_isometry_h3},
           {"scaling-isometry-g", 1e-6, res_scaling_isometry_g},
           {"gi-well-posedness", 1e-8, res_gi_well_posed},
       }},
      {"symmetric-curvature",
       {
           {"m1-positive-definite", 1e-12, res_m1_positive_definite},
           {"m2-orthonormal-gram", 1e-14, res_m2_orthonormal},
           {"symmetric-curvature-h3", 1e-6, res_symmetric_curvature_h3},
           {"symmetric-curvature-g", 1e-6, res_symmetric_curvature_g},
           {"g2-sectional-minus4", 1e-5, res_g2_sectional},
           {"curvature-chain", 1e-6, res_curvature_chain},
       }},
  };
  return reg;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, _] : suite_registry()) names.push_back(name);
  names.push_back("all");
  return names;
}

std::vector<CheckResult> run_battery(const std::string& suite, uint64_t seed, int samples,
                                     const TolOverrides& overrides) {
  if (samples < 1) throw std::invalid_argument("run_battery: samples must be >= 1");
  std::vector<CheckResult> results;
  bool found = false;
  for (const auto& [name, specs] : suite_registry()) {
    if (suite != "all" && suite != name) continue;
    found = true;
    for (const auto& spec : specs) {
      CheckResult r;
      r.name = spec.name;
      r.max_residual = spec.residual(seed ^ fnv1a(spec.name), samples);
      auto ov = overrides.find(spec.name);
      r.tolerance = ov != overrides.end() ? ov->second : spec.default_tolerance;
      if (r.tolerance <= 0) throw std::invalid_argument("tolerance override must be positive");
      r.pass = std::isfinite(r.max_residual) && r.max_residual < r.tolerance;
      results.push_back(std::move(r));
    }
  }
  if (!found) throw std::invalid_argument("unknown suite: " + suite);
  return results;
}

CheckResult run_check(const std::string& name, uint64_t seed, int samples) {
  for (const auto& [_, specs] : suite_registry())
    for (const auto& spec : specs)
      if (spec.name == name) {
        CheckResult r;
        r.name = name;
        r.max_residual = spec.residual(seed ^ fnv1a(name), samples);
        r.tolerance = spec.default_tolerance;
        r.pass = std::isfinite(r.max_residual) && r.max_residual < r.tolerance;
        return r;
      }
  throw std::invalid_argument("unknown check: " + name);
}

SuiteReport run_suite(const SuiteConfig& cfg) {
  auto t0 = std::chrono::steady_clock::now();
  SuiteReport r;
  r.suite = cfg.suite;
  r.seed = cfg.seed;
  r.samples = cfg.samples;
  r.checks = run_battery(cfg.suite, cfg.seed, cfg.samples, cfg.tolerance_overrides);
  auto t1 = std::chrono::steady_clock::now();
  r.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
  return r;
}

}  // namespace holoform
