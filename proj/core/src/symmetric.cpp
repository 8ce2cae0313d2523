#include "holoform/symmetric.hpp"

#include <cmath>

#include "holoform/rng.hpp"

namespace holoform {

namespace {

struct Quat {
  double r = 0, i = 0, j = 0, k = 0;

  Quat operator+(const Quat& o) const { return {r + o.r, i + o.i, j + o.j, k + o.k}; }
  Quat operator*(const Quat& o) const {
    return {r * o.r - i * o.i - j * o.j - k * o.k,
            r * o.i + i * o.r + j * o.k - k * o.j,
            r * o.j - i * o.k + j * o.r + k * o.i,
            r * o.k + i * o.j - j * o.i + k * o.r};
  }
  double norm_sq() const { return r * r + i * i + j * j + k * k; }
  Quat inverse() const {
    double n = norm_sq();
    if (n < 1e-300) throw std::domain_error("Quat: zero divisor");
    return {r / n, -i / n, -j / n, -k / n};
  }
};

Quat from_complex(cplx z) { return {z.real(), z.imag(), 0, 0}; }

const double kDiffStep = 1e-5;

Sl2Vector random_m_part(SplitMix64& rng, Split which) {
  std::array<cplx, 3> c;
  for (auto& x : c) x = rng.gauss_complex();
  return cartan_split(sl2_from_coefficients(c), which).m_part;
}

}  // namespace

H3Point base_h3() { return {0, 0, 1}; }

GeodesicLine base_line() {
  return {BoundaryPoint::finite(cplx(0, 1)), BoundaryPoint::finite(cplx(0, -1))};
}

ChartMetric h3_metric_chart() {
  ChartMetric g;
  g.dim = 3;
  g.field = ScalarField::real;
  g.domain_guard = [](const ChartPoint& p) { return p.x[2].real() > 1e-9; };
  g.components = [](const ChartPoint& p) {
    double t = p.x[2].real();
    SmallMat m(3);
    for (int i = 0; i < 3; ++i) m(i, i) = 1.0 / (t * t);
    return m;
  };
  return g;
}

H3Point h3_action(const PslElement& a, const H3Point& p) {
  const CMat2& m = a.rep();
  Quat q{p.x, p.y, p.t, 0};
  Quat num = from_complex(m.a) * q + from_complex(m.b);
  Quat den = from_complex(m.c) * q + from_complex(m.d);
  Quat w = num * den.inverse();
  return {w.r, w.i, w.j};
}

CartanSplit cartan_split(const Sl2Vector& v, Split which) {
  CMat2 star = which == Split::one ? v.mat().conj_transpose() : v.mat().transpose();
  CartanSplit s{which, Sl2Vector((v.mat() - star) * cplx(0.5)),
                Sl2Vector((v.mat() + star) * cplx(0.5))};
  return s;
}

H3Point beta1(const PslElement& a) { return h3_action(a, base_h3()); }

GeodesicLine beta2(const PslElement& a) { return g_action(a, base_line()); }

// 4th-order central differences: Ad-conjugated arguments can have large
// norms, and the truncation error grows with the cube of the norm at
// second order. The extra stencil points keep the residual checks sharp.
std::array<double, 3> beta1_differential(const PslElement& a, const Sl2Vector& v) {
  const double h = kDiffStep;
  auto at = [&](double s) { return beta1(a * exp_sl2(v * cplx(s))); };
  H3Point p1 = at(h), m1 = at(-h), p2 = at(2 * h), m2 = at(-2 * h);
  auto d = [h](double f1, double g1, double f2, double g2) {
    return (8 * (f1 - g1) - (f2 - g2)) / (12 * h);
  };
  return {d(p1.x, m1.x, p2.x, m2.x), d(p1.y, m1.y, p2.y, m2.y), d(p1.t, m1.t, p2.t, m2.t)};
}

GChartPair g_chart_of(const GeodesicLine& line) {
  return {prefers_w_chart(line.p1), prefers_w_chart(line.p2)};
}

std::array<cplx, 2> beta2_differential(const PslElement& a, const Sl2Vector& v,
                                       GChartPair* chart_out) {
  GChartPair chart = g_chart_of(beta2(a));
  if (chart_out) *chart_out = chart;
  const double h = kDiffStep;
  auto coords = [&](double s) -> std::array<cplx, 2> {
    GeodesicLine line = beta2(a * exp_sl2(v * cplx(s)));
    return {boundary_coordinate(line.p1, chart.w1), boundary_coordinate(line.p2, chart.w2)};
  };
  auto p1 = coords(h), m1 = coords(-h), p2 = coords(2 * h), m2 = coords(-2 * h);
  auto d = [h](cplx f1, cplx g1, cplx f2, cplx g2) {
    return (8.0 * (f1 - g1) - (f2 - g2)) / (12 * h);
  };
  return {d(p1[0], m1[0], p2[0], m2[0]), d(p1[1], m1[1], p2[1], m2[1])};
}

cplx g_metric_value(const GeodesicLine& line, const std::array<cplx, 2>& u,
                    const std::array<cplx, 2>& v) {
  GChartPair chart = g_chart_of(line);
  cplx c1 = boundary_coordinate(line.p1, chart.w1);
  cplx c2 = boundary_coordinate(line.p2, chart.w2);
  cplx g12 = g_cross_component(chart.w1, chart.w2, c1, c2);
  return g12 * (u[0] * v[1] + u[1] * v[0]);
}

double scaling_isometry_check(Split which, const PslElement& a, uint64_t seed, int samples) {
  SplitMix64 rng(seed);
  double worst = 0;
  for (int s = 0; s < samples; ++s) {
    Sl2Vector v = random_m_part(rng, which);
    Sl2Vector w = random_m_part(rng, which);
    cplx reference = 4.0 * hrm_metric(v, w);
    cplx value;
    if (which == Split::one) {
      auto dv = beta1_differential(a, v);
      auto dw = beta1_differential(a, w);
      H3Point target = beta1(a);
      value = (dv[0] * dw[0] + dv[1] * dw[1] + dv[2] * dw[2]) / (target.t * target.t);
    } else {
      auto dv = beta2_differential(a, v);
      auto dw = beta2_differential(a, w);
      value = g_metric_value(beta2(a), dv, dw);
    }
    worst = std::max(worst, std::abs(value - reference));
  }
  return worst;
}

ChartMetric symmetric_space_metric(Split which) {
  if (which == Split::one) {
    ChartMetric g = h3_metric_chart();
    auto base = g.components;
    g.components = [base](const ChartPoint& p) { return base(p) * cplx(0.25); };
    return g;
  }
  ChartMetric g;
  g.dim = 2;
  g.field = ScalarField::complex;
  g.domain_guard = [](const ChartPoint& p) { return std::abs(p.x[0] - p.x[1]) > 1e-6; };
  g.components = [](const ChartPoint& p) {
    SmallMat m(2);
    m(0, 1) = 0.25 * g_cross_component(false, false, p.x[0], p.x[1]);
    m(1, 0) = m(0, 1);
    return m;
  };
  return g;
}

ChartPoint symmetric_space_base_coords(Split which) {
  if (which == Split::one) return {0.0, 0.0, 1.0};
  return {cplx(0, 1), cplx(0, -1)};
}

double symmetric_curvature_check(Split which, const Sl2Vector& u, const Sl2Vector& v,
                                 const Sl2Vector& w) {
  for (const Sl2Vector* m : {&u, &v, &w})
    if (cartan_split(*m, which).h_part.mat().max_abs() > 1e-10)
      throw std::invalid_argument("symmetric_curvature_check: input not in m_i");

  PslElement id;
  auto push = [&](const Sl2Vector& m) -> Coords {
    if (which == Split::one) {
      auto d = beta1_differential(id, m);
      return {d[0], d[1], d[2], 0.0};
    }
    auto d = beta2_differential(id, m);
    return {d[0], d[1], 0.0, 0.0};
  };

  ChartMetric gi = symmetric_space_metric(which);
  ChartPoint base = symmetric_space_base_coords(which);
  Coords lhs = curvature_13(gi, base, push(u), push(v), push(w));
  Coords rhs = push(bracket(bracket(u, v), w));
  const int dim = which == Split::one ? 3 : 2;
  double worst = 0;
  for (int i = 0; i < dim; ++i) worst = std::max(worst, std::abs(lhs[i] + rhs[i]));
  return worst;
}

}  // namespace holoform
