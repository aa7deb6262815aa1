#include "homdyn/lie.hpp"

#include <cmath>

namespace homdyn::lie {

namespace {
Mat3 unit(int i, int j) {
  Mat3 m = Mat3::Zero();
  m(i, j) = 1.0;
  return m;
}
}  // namespace

const std::array<Mat3, 8>& sl3_basis() {
  static const std::array<Mat3, 8> b = [] {
    std::array<Mat3, 8> a;
    a[0] = unit(0, 1);
    a[1] = unit(0, 2);
    a[2] = unit(1, 0);
    a[3] = unit(1, 2);
    a[4] = unit(2, 0);
    a[5] = unit(2, 1);
    Mat3 d1 = Mat3::Zero(), d2 = Mat3::Zero();
    d1(0, 0) = 1.0;
    d1(1, 1) = -1.0;
    a[6] = d1 / std::sqrt(2.0);
    d2(0, 0) = 1.0;
    d2(1, 1) = 1.0;
    d2(2, 2) = -2.0;
    a[7] = d2 / std::sqrt(6.0);
    return a;
  }();
  return b;
}

const std::array<Mat3, 5>& r_weight_basis() {
  static const std::array<Mat3, 5> b = [] {
    std::array<Mat3, 5> a;
    a[0] = unit(0, 2);
    a[1] = (unit(0, 1) - unit(1, 2)) / std::sqrt(2.0);
    Mat3 d = Mat3::Zero();
    d(0, 0) = 1.0;
    d(1, 1) = -2.0;
    d(2, 2) = 1.0;
    a[2] = d / std::sqrt(6.0);
    a[3] = (unit(2, 1) - unit(1, 0)) / std::sqrt(2.0);
    a[4] = unit(2, 0);
    return a;
  }();
  return b;
}

const std::array<Mat3, 3>& h_basis() {
  static const std::array<Mat3, 3> b = [] {
    std::array<Mat3, 3> a;
    a[0] = gen_N() / std::sqrt(2.0);
    a[1] = gen_A0() / std::sqrt(2.0);
    a[2] = (unit(1, 0) + unit(2, 1)) / std::sqrt(2.0);
    return a;
  }();
  return b;
}

Coords8 coords_of(const Mat3& m) {
  const auto& b = sl3_basis();
  Coords8 c;
  for (int i = 0; i < 8; ++i) c(i) = (m.array() * b[i].array()).sum();
  return c;
}

Mat3 matrix_of(const Coords8& c) {
  const auto& b = sl3_basis();
  Mat3 m = Mat3::Zero();
  for (int i = 0; i < 8; ++i) m += c(i) * b[i];
  return m;
}

Mat3 project_h(const Mat3& x) {
  const Mat3& J = form_J();
  return 0.5 * (x - J * x.transpose() * J);
}

Mat3 project_r(const Mat3& x) {
  const Mat3& J = form_J();
  return 0.5 * (x + J * x.transpose() * J);
}

LieVector::LieVector(const Coords8& c) : c_(c) {
  const Mat3 m = matrix_of(c);
  h_ = coords_of(project_h(m));
  const Mat3 r = project_r(m);
  const double a = (r.array() * elem_E13().array()).sum();
  r0_ = coords_of(a * elem_E13());
  r1_ = coords_of(r) - r0_;
}

LieVector LieVector::from_matrix(const Mat3& m) {
  if (std::abs(m.trace()) > 1e-10 * std::max(1.0, m.norm()))
    throw std::invalid_argument("LieVector::from_matrix: input not traceless");
  return LieVector(coords_of(m));
}

Mat3 LieVector::matrix() const { return matrix_of(c_); }

namespace {

// ||X||_1-based scaling, Pade-13 (Higham 2005 coefficients)
Mat3 pade13_exp(const Mat3& a) {
  static const double c[14] = {64764752532480000., 32382376266240000.,
                               7771770303897600.,  1187353796428800.,
                               129060195264000.,   10559470521600.,
                               670442572800.,      33522128640.,
                               1323241920.,        40840800.,
                               960960.,            16380.,
                               182.,               1.};
  const double nrm = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  Mat3 as = a;
  const double theta13 = 5.371920351148152;
  if (nrm > theta13) {
    squarings = static_cast<int>(std::ceil(std::log2(nrm / theta13)));
    as = a / std::pow(2.0, squarings);
  }
  const Mat3 a2 = as * as;
  const Mat3 a4 = a2 * a2;
  const Mat3 a6 = a2 * a4;
  const Mat3 I = Mat3::Identity();
  const Mat3 u = as * (a6 * (c[13] * a6 + c[11] * a4 + c[9] * a2) +
                       c[7] * a6 + c[5] * a4 + c[3] * a2 + c[1] * I);
  const Mat3 v = a6 * (c[12] * a6 + c[10] * a4 + c[8] * a2) + c[6] * a6 +
                 c[4] * a4 + c[2] * a2 + c[0] * I;
  Mat3 r = (v - u).fullPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) r = r * r;
  return r;
}

}  // namespace

Mat3 matrix_exp_mat(const Mat3& x) {
  const double n = x.norm();
  if (n > 50.0)
    throw std::domain_error("matrix_exp: ||X|| > 50 (norm-overflow guard)");
  // exact series for inputs on the u_s line: N^3 = 0
  const Mat3 N = gen_N();
  const double s = 0.5 * (x(0, 1) + x(1, 2));
  if ((x - s * N).norm() <= 1e-14 * std::max(1.0, n)) {
    return Mat3::Identity() + s * N + (s * s / 2.0) * (N * N);
  }
  return pade13_exp(x);
}

Mat3 matrix_exp(const LieVector& x) { return matrix_exp_mat(x.matrix()); }

Mat3 adjoint_mat(const Mat3& g, const Mat3& x) {
  if (std::abs(g.determinant() - 1.0) > 1e-8)
    throw std::invalid_argument("adjoint: input not unimodular");
  return g * x * g.inverse();
}

LieVector adjoint(const Mat3& g, const LieVector& x) {
  return LieVector(coords_of(adjoint_mat(g, x.matrix())));
}

std::pair<LieVector, LieVector> decompose(const LieVector& x) {
  return {x.h_part(), x.r_part()};
}

std::pair<LieVector, LieVector> split_r(const LieVector& r) {
  if (r.h_norm() > 1e-10 * std::max(1.0, r.norm()))
    throw std::invalid_argument("split_r: input not in r");
  return {r.r0_part(), r.r1_part()};
}

LieVector z_direction(const LieVector& r) {
  const double n = r.r0_norm();
  if (n == 0.0) return LieVector();
  return r.r0_part() * (1.0 / n);
}

HMembership is_in_H(const Mat3& g, double tol) {
  const Mat3& J = form_J();
  const double res_form = (g.transpose() * J * g - J).cwiseAbs().maxCoeff();
  const double res_det = std::abs(g.determinant() - 1.0);
  const double res = std::max(res_form, res_det);
  return {res <= tol, res};
}

Mat3 dexp_left(const Mat3& x, const Mat3& d, int terms) {
  // sum_k (-ad_x)^k d / (k+1)!
  Mat3 acc = d;
  Mat3 term = d;
  double fact = 1.0;
  for (int k = 1; k < terms; ++k) {
    term = -(x * term - term * x);
    fact *= static_cast<double>(k + 1);
    acc += term / fact;
  }
  return acc;
}

}  // namespace homdyn::lie
