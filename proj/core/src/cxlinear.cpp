#include "holoform/cxlinear.hpp"

#include <cmath>

namespace holoform {

namespace {
bool finite_c(cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
}  // namespace

bool CMat2::finite() const {
  return finite_c(a) && finite_c(b) && finite_c(c) && finite_c(d);
}

cplx bilinear_cn(const CVec& v, const CVec& w) {
  if (v.dim() != w.dim()) throw std::invalid_argument("bilinear_cn: dimension mismatch");
  cplx s = 0;
  for (int i = 0; i < v.dim(); ++i) s += v[i] * w[i];
  return s;
}

cplx mat2_bilinear(const CMat2& m, const CMat2& n) {
  return 0.5 * ((m * n).trace() - m.trace() * n.trace());
}

CMat2 f_map(const CVec& z) {
  if (z.dim() != 4) throw std::invalid_argument("f_map: expected dim 4");
  const cplx i(0.0, 1.0);
  return {-z[0] - i * z[3], -z[1] - i * z[2],
          -z[1] + i * z[2], z[0] - i * z[3]};
}

}  // namespace holoform
