#pragma once
#include <Eigen/Dense>
#include <array>
#include <optional>
#include <stdexcept>

namespace homdyn::lie {

using Mat3 = Eigen::Matrix3d;
using Vec3 = Eigen::Vector3d;
using Coords8 = Eigen::Matrix<double, 8, 1>;

// Gram matrix J of B(v) = 2*v1*v3 - v2^2.  J^2 = I, det J = 1.
inline const Mat3& form_J() {
  static const Mat3 J = [] {
    Mat3 m = Mat3::Zero();
    m(0, 2) = 1.0;
    m(1, 1) = -1.0;
    m(2, 0) = 1.0;
    return m;
  }();
  return J;
}

inline double form_B(const Vec3& v) { return 2.0 * v(0) * v(2) - v(1) * v(1); }

// Fixed orthonormal basis of sl3 w.r.t. the Frobenius inner product
// <X,Y> = tr(X Y^T), in this order:
//   0: E12   1: E13   2: E21   3: E23   4: E31   5: E32
//   6: (E11 - E22)/sqrt(2)
//   7: (E11 + E22 - 2 E33)/sqrt(6)
const std::array<Mat3, 8>& sl3_basis();

// elementary things used all over
inline Mat3 gen_N() {  // generator of u_s: exp(s N) = u_s
  Mat3 m = Mat3::Zero();
  m(0, 1) = 1.0;
  m(1, 2) = 1.0;
  return m;
}
inline Mat3 gen_A0() {  // generator of a_t: exp(t A0) = a_t
  Mat3 m = Mat3::Zero();
  m(0, 0) = 1.0;
  m(2, 2) = -1.0;
  return m;
}
inline Mat3 elem_E13() {
  Mat3 m = Mat3::Zero();
  m(0, 2) = 1.0;
  return m;
}

// Element of sl3 in the fixed orthonormal basis, with the h/r0/r1 split
// cached at construction.  Immutable.
class LieVector {
 public:
  LieVector() : c_(Coords8::Zero()), h_(Coords8::Zero()), r0_(Coords8::Zero()), r1_(Coords8::Zero()) {}
  explicit LieVector(const Coords8& c);
  static LieVector from_matrix(const Mat3& m);  // m must be traceless (1e-10)

  const Coords8& coords() const { return c_; }
  Mat3 matrix() const;
  double norm() const { return c_.norm(); }

  LieVector h_part() const { return LieVector(h_); }
  LieVector r_part() const { return LieVector(Coords8(r0_ + r1_)); }
  LieVector r0_part() const { return LieVector(r0_); }
  LieVector r1_part() const { return LieVector(r1_); }
  double h_norm() const { return h_.norm(); }
  double r_norm() const { return (r0_ + r1_).norm(); }
  double r0_norm() const { return r0_.norm(); }

  LieVector operator+(const LieVector& o) const { return LieVector(Coords8(c_ + o.c_)); }
  LieVector operator-(const LieVector& o) const { return LieVector(Coords8(c_ - o.c_)); }
  LieVector operator*(double a) const { return LieVector(Coords8(c_ * a)); }

 private:
  Coords8 c_, h_, r0_, r1_;
};

inline LieVector operator*(double a, const LieVector& x) { return x * a; }

// coordinate helpers (no LieVector construction cost)
Coords8 coords_of(const Mat3& m);
Mat3 matrix_of(const Coords8& c);

// closed-form projections onto h = Lie(SO(B)) and its Ad(H)-invariant
// complement r, using J^2 = I:
//   P_h(X) = (X - J X^T J)/2,   P_r(X) = (X + J X^T J)/2
Mat3 project_h(const Mat3& x);
Mat3 project_r(const Mat3& x);

// exp: sl3 -> SL3.  Scaling-and-squaring with the degree-13 Pade
// approximant; inputs detected (1e-14) to lie in span{N} take the exact
// 3-term nilpotent series.  Throws std::domain_error if ||X|| > 50.
Mat3 matrix_exp(const LieVector& x);
Mat3 matrix_exp_mat(const Mat3& x);  // same, matrix argument

// Ad(g) X = g X g^{-1}.  Requires |det g - 1| <= 1e-8.
LieVector adjoint(const Mat3& g, const LieVector& x);
Mat3 adjoint_mat(const Mat3& g, const Mat3& x);

// X = h_part + r_part with h_part in h, r_part in r.
std::pair<LieVector, LieVector> decompose(const LieVector& x);

// r = r0 + r1: orthogonal projection onto span{E13} and its complement in r.
// Input must lie in r within 1e-10 (throws std::invalid_argument).
std::pair<LieVector, LieVector> split_r(const LieVector& r);

// Z_r = r0/||r0||, or 0 if r0 = 0.
LieVector z_direction(const LieVector& r);

struct HMembership {
  bool ok;
  double residual;  // max of ||g^T J g - J||_inf and |det g - 1|
};
HMembership is_in_H(const Mat3& g, double tol);

struct ConditionInfo {
  double max_entry;
  double det_residual;  // |det - 1|
};
inline ConditionInfo condition_info(const Mat3& m) {
  return {m.cwiseAbs().maxCoeff(), std::abs(m.determinant() - 1.0)};
}

// Weight basis of r under Ad(a_t) (weights 2,1,0,-1,-2), orthonormal:
//   v2 = E13, v1 = (E12-E23)/sqrt(2), v0 = diag(1,-2,1)/sqrt(6),
//   vm1 = (E32-E21)/sqrt(2), vm2 = E31
const std::array<Mat3, 5>& r_weight_basis();

// Orthonormal basis of h: {N/sqrt(2), A0/sqrt(2), (E21+E32)/sqrt(2)}
const std::array<Mat3, 3>& h_basis();

// dexp: left-trivialized differential of exp at x applied to d,
//   exp(-x) . D exp_x [d] = sum_k (-ad_x)^k d / (k+1)!
// truncated to terms_k; adequate for ||x|| <= 0.5.
Mat3 dexp_left(const Mat3& x, const Mat3& d, int terms = 8);

}  // namespace homdyn::lie
