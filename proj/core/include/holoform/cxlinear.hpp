#pragma once

#include <array>
#include <complex>
#include <initializer_list>
#include <stdexcept>

namespace holoform {

using cplx = std::complex<double>;

constexpr double kDefaultTol = 1e-12;

/// Complex vector of dimension 1..4. The bilinear pairing below is the
/// symmetric one (no conjugation), so this is NOT a Hermitian inner
/// product space.
class CVec {
 public:
  CVec() = default;
  explicit CVec(int dim) : dim_(dim) {
    if (dim < 1 || dim > 4) throw std::invalid_argument("CVec: dim must be 1..4");
  }
  CVec(std::initializer_list<cplx> xs) : dim_(static_cast<int>(xs.size())) {
    if (dim_ < 1 || dim_ > 4) throw std::invalid_argument("CVec: dim must be 1..4");
    int i = 0;
    for (cplx x : xs) e_[i++] = x;
  }

  int dim() const { return dim_; }
  cplx& operator[](int i) { return e_[i]; }
  const cplx& operator[](int i) const { return e_[i]; }

  CVec operator+(const CVec& o) const {
    CVec r(dim_);
    for (int i = 0; i < dim_; ++i) r.e_[i] = e_[i] + o.e_[i];
    return r;
  }
  CVec operator-(const CVec& o) const {
    CVec r(dim_);
    for (int i = 0; i < dim_; ++i) r.e_[i] = e_[i] - o.e_[i];
    return r;
  }
  CVec operator*(cplx s) const {
    CVec r(dim_);
    for (int i = 0; i < dim_; ++i) r.e_[i] = s * e_[i];
    return r;
  }

  /// Euclidean magnitude; used only for error scaling, never as a metric.
  double norm() const {
    double s = 0;
    for (int i = 0; i < dim_; ++i) s += std::norm(e_[i]);
    return std::sqrt(s);
  }

 private:
  std::array<cplx, 4> e_{};
  int dim_ = 0;
};

inline CVec operator*(cplx s, const CVec& v) { return v * s; }

/// 2x2 complex matrix, row major.
struct CMat2 {
  cplx a{}, b{}, c{}, d{};

  static CMat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static CMat2 zero() { return {}; }

  cplx trace() const { return a + d; }
  cplx det() const { return a * d - b * c; }

  CMat2 operator+(const CMat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  CMat2 operator-(const CMat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  CMat2 operator-() const { return {-a, -b, -c, -d}; }
  CMat2 operator*(const CMat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  CMat2 operator*(cplx s) const { return {s * a, s * b, s * c, s * d}; }

  CMat2 transpose() const { return {a, c, b, d}; }
  CMat2 conj_transpose() const {
    return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)};
  }
  CMat2 inverse() const {
    cplx dt = det();
    if (std::abs(dt) < 1e-300) throw std::domain_error("CMat2: singular matrix");
    return {d / dt, -b / dt, -c / dt, a / dt};
  }

  /// Entrywise max modulus.
  double max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
  }
  double frobenius() const {
    return std::sqrt(std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d));
  }
  bool finite() const;
};

inline CMat2 operator*(cplx s, const CMat2& m) { return m * s; }

/// Standard symmetric bilinear form on C^n: sum v_i w_i, no conjugation.
cplx bilinear_cn(const CVec& v, const CVec& w);

/// Bilinear form on Mat(2,C) polarizing the quadratic form M -> -det(M):
/// (tr(MN) - tr(M) tr(N)) / 2.
cplx mat2_bilinear(const CMat2& m, const CMat2& n);

/// The linear isometry C^4 -> Mat(2,C):
///   (z1,z2,z3,z4) -> [[-z1 - i z4, -z2 - i z3], [-z2 + i z3, z1 - i z4]].
/// Pulls mat2_bilinear back to bilinear_cn; in particular
/// -det(f_map(z)) = sum z_k^2.
CMat2 f_map(const CVec& z);

}  // namespace holoform
