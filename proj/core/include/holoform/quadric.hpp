#pragma once

#include <vector>

#include "holoform/chart.hpp"
#include "holoform/rng.hpp"
#include "holoform/sl2.hpp"

namespace holoform {

/// Point of the complex quadric X_n = { z in C^{n+1} | sum z_i^2 = -1 }.
struct QuadricPoint {
  CVec z;
  double residual = 0;  // |sum z_i^2 + 1|

  int n() const { return z.dim() - 1; }
};

/// Tangent frame at a quadric point: n vectors spanning z^perp with respect
/// to the symmetric bilinear form.
struct QuadricFrame {
  QuadricPoint base;
  std::vector<CVec> vectors;
};

/// Draw a point of X_n: Gaussian w in C^{n+1}, rescaled by a principal
/// square root of -1 / (sum w_i^2); redraws when the draw is near the
/// isotropic cone.
QuadricPoint quadric_sample(SplitMix64& rng, int n);

/// Rescale a given ambient vector onto the quadric (used by tests for
/// forced draws). Throws if the vector is near-isotropic.
QuadricPoint quadric_project(const CVec& w);

/// Gram-Schmidt frame of z^perp against the symmetric form, starting from
/// coordinate vectors and skipping near-isotropic pivots.
QuadricFrame quadric_frame(const QuadricPoint& p);

/// Local graph chart of X_n around p: solve the quadric constraint for the
/// coordinate of largest modulus (branch fixed by continuity from p) and
/// return scale * (induced metric) over the remaining n coordinates.
/// Components are g_ab = scale * (delta_ab + u_a u_b / zj(u)^2) with
/// zj(u)^2 = -1 - sum u^2.
ChartMetric quadric_chart(const QuadricPoint& p, cplx scale);

/// Chart coordinates of the base point p in its own graph chart.
ChartPoint quadric_chart_center(const QuadricPoint& p);

/// The isometry X_3 -> SL(2,C) given by restricting f_map.
PslElement x3_to_sl2(const QuadricPoint& p);

}  // namespace holoform
