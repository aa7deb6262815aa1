#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "homdyn/lie.hpp"

namespace homdyn::space {

using lie::Coords8;
using lie::LieVector;
using lie::Mat3;
using lie::Vec3;

// Injectivity-radius model delta0(z) = c_inj / alpha1(z)^2.
inline constexpr double kCInj = 0.05;

struct ShortestVec {
  Vec3 v;
  double len;
  Eigen::Vector3i coeffs;
};

// Exact shortest nonzero vector of basis * Z^3 (LLL conditioning, then
// exhaustive Fincke-Pohst enumeration).
ShortestVec shortest_vector(const Mat3& basis);

// Canonical representative of the lattice: columns are the greedy minima
// (shortest, shortest independent, shortest completing to a basis), each
// sign-normalized, with the last column's sign fixed by det = +1.
// Deterministic ties, Gamma-invariant, idempotent.
Mat3 canonical_reduce(const Mat3& basis);

// A point of X = SL3(R)/SL3(Z).  Immutable; reduced representative and
// alpha1 are computed at construction.
class SpacePoint {
 public:
  explicit SpacePoint(const Mat3& basis);
  const Mat3& basis() const { return basis_; }
  const Mat3& reduced() const { return reduced_; }
  double alpha1() const { return alpha1_; }

  std::string serialize() const;  // 9 floats, row-major, 17 sig digits
  static SpacePoint deserialize(std::string_view line);

 private:
  Mat3 basis_, reduced_;
  double alpha1_;
};

double alpha1(const SpacePoint& x);
Mat3 reduce(const SpacePoint& x);
bool in_compact(const SpacePoint& x, double R);
bool same_point(const SpacePoint& a, const SpacePoint& b, double tol = 1e-8);

double delta0(const SpacePoint& z, double c_inj = kCInj);

struct LocalCoords {
  LieVector r;  // in r
  LieVector h;  // in h
};

// Solves exp(r) exp(h) * rep(z) = rep(x) for ||r||,||h|| <= delta, where the
// representative of x runs over the Gamma-orbit.  Returns absent when x is
// not in the chart box.  Throws if delta exceeds delta0(z).
std::optional<LocalCoords> local_coords(const SpacePoint& z,
                                        const SpacePoint& x, double delta);

// Iwasawa g = k a n coordinates; t1 = log(a1/a2), t2 = log(a2/a3),
// x12 = mu21, x13 = mu31, x23 = mu32.
struct KanCoords {
  double t1, t2, x12, x13, x23;
  Mat3 k;
};
KanCoords kan_coords(const Mat3& g);
Mat3 kan_compose(const KanCoords& c);

// Proposal window for the Haar sampler; covers the canonical fundamental
// domain (Minkowski bounds t1 <= log(2/sqrt(3)), t2 <= log(6/pi),
// |x12|,|x13| <= 1/2, |x23| <= 1) with margins.
struct HaarWindow {
  double t1_max = 0.20;
  double t2_max = 0.75;
  double x12_box = 0.60;
  double x13_box = 0.60;
  double x23_box = 1.10;
};

// i.i.d. Haar(m) samples via rejection: propose k a n with the exact Haar
// density on the window, accept iff the proposal equals its own canonical
// representative.  Deterministic given seed.
std::vector<SpacePoint> haar_sample(int count, std::uint64_t seed,
                                    const HaarWindow& w = {});

struct HaarCalibration {
  double accept_rate;   // canonical-domain fraction of the proposal window
  double volume_units;  // vol(X) in chart (orthonormal-frame) Haar units
  double frame_const;   // c0 in |det frame| = c0 * exp(2 t1 + 2 t2)
  std::int64_t proposals;
};

// Measures the acceptance rate and converts it into the absolute Haar volume
// of X in the same units as chart_jacobian.  Used to normalize m-integrals.
HaarCalibration calibrate_haar(std::int64_t proposals, std::uint64_t seed,
                               const HaarWindow& w = {});

// |det| of the left-trivialized differential of (r,h) -> exp(r) exp(h) z
// in the orthonormal basis of g.  Independent of z.
double chart_jacobian(const LieVector& r, const LieVector& h);

// KAN frame determinant (for the density self-test): |det| of the
// left-trivialized differential of (t1,t2,x12,x13,x23,S^3) -> k a n.
double kan_frame_det(double t1, double t2, double x12, double x13, double x23,
                     const Eigen::Vector4d& q);

struct CompactPartSpec {
  double R = 1.0;     // query radius, >= 1
  double R0 = 100.0;  // X_cpct = S(R0); config-adjustable
  double R1 = 2.0;    // empirical orbit-intersection radius
};

}  // namespace homdyn::space
