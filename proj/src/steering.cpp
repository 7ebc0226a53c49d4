// Copyright 2026 The qse-toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qse/steering.hpp"

#include <cmath>

namespace qse {

namespace {

constexpr double kPurityGapTol = 1e-12;
constexpr double kAxisZeroRel = 1e-9;
constexpr double kPi = 3.14159265358979323846;

// Flip axis columns so the first non-negligible component is positive.
void canonicalize_axes(Matrix3d& axes) {
  for (int c = 0; c < 3; ++c) {
    for (int r = 0; r < 3; ++r) {
      if (std::abs(axes(r, c)) > 1e-9) {
        if (axes(r, c) < 0.0) axes.col(c) *= -1.0;
        break;
      }
    }
  }
}

Ellipsoid point_ellipsoid(const BlochVector& center) {
  Ellipsoid e;
  e.center = center;
  e.dim = 0;
  return e;
}

// Rank of the full coefficient matrix.  Its leading singular value is at
// least 1 (the unit-trace entry), so a relative cutoff is well scaled here,
// unlike on the normalized correlation block whose entries can all vanish.
int coefficient_rank(const PauliTheta& th) {
  Eigen::JacobiSVD<Matrix4d> svd(th.theta);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > kAxisZeroRel * sv(0)) ++rank;
  return rank;
}

std::array<BlochVector, 2> segment_endpoints(const Ellipsoid& e) {
  const BlochVector axis = e.semiaxes(0) * e.orientation.col(0);
  return {e.center + axis, e.center - axis};
}

}  // namespace

SteeredOutcome steered_state(const TwoQubitState& state, const BlochVector& x,
                             Side steered_side) {
  if (std::abs(x.norm() - 1.0) > 1e-9)
    fail(ErrorCode::DomainError,
         "measurement direction has norm " + std::to_string(x.norm()));
  const PauliTheta& th = state.theta();
  // Steering A conditions on an outcome of a measurement on B and vice versa.
  const BlochVector own = steered_side == Side::A ? th.a() : th.b();
  const BlochVector other = steered_side == Side::A ? th.b() : th.a();
  const Matrix3d t = steered_side == Side::A
                         ? th.correlation()
                         : Matrix3d(th.correlation().transpose());
  SteeredOutcome out;
  out.probability = 0.5 * (1.0 + other.dot(x));
  if (out.probability < 1e-12)
    fail(ErrorCode::ZeroProbabilityOutcome,
         "outcome probability " + std::to_string(out.probability));
  out.bloch = (own + t * x) / (2.0 * out.probability);
  return out;
}

TwoQubitState slocc_normalize(const TwoQubitState& state, Side side) {
  // Filter on the opposite side so that marginal becomes maximally mixed.
  const Side other = side == Side::A ? Side::B : Side::A;
  const SingleQubitState marginal = reduced_state(state, other);
  if (1.0 - marginal.bloch().squaredNorm() <= kPurityGapTol)
    fail(ErrorCode::ProductStateDegenerate,
         "opposite marginal is pure; no filtering normal form");
  const Matrix2c k = inverse_sqrt(2.0 * marginal.density());
  const Matrix4c kk = other == Side::B ? kron(Matrix2c::Identity(), k)
                                       : kron(k, Matrix2c::Identity());
  Matrix4c rho = kk * state.density() * kk.adjoint();
  rho /= rho.trace().real();
  return TwoQubitState(rho);
}

Ellipsoid steering_ellipsoid(const TwoQubitState& state, Side side) {
  const PauliTheta& th = state.theta();
  const Side other = side == Side::A ? Side::B : Side::A;
  const BlochVector other_bloch = other == Side::B ? th.b() : th.a();

  // A pure opposite marginal forces a product state: the steered set is the
  // single point at this side's own Bloch vector.
  if (1.0 - other_bloch.squaredNorm() <= kPurityGapTol)
    return point_ellipsoid(side == Side::A ? th.a() : th.b());

  const TwoQubitState normal = slocc_normalize(state, side);
  const PauliTheta& nth = normal.theta();
  const BlochVector center = side == Side::A ? nth.a() : nth.b();
  const Matrix3d t = side == Side::A
                         ? nth.correlation()
                         : Matrix3d(nth.correlation().transpose());

  Eigen::JacobiSVD<Matrix3d> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Ellipsoid e;
  e.center = center;
  e.semiaxes = svd.singularValues();
  e.orientation = svd.matrixU();
  canonicalize_axes(e.orientation);
  e.dim = coefficient_rank(th) - 1;
  // Degenerate directions carry only floating-point noise; pin them to zero so
  // lengths/areas/volumes of flat ellipsoids vanish exactly.
  for (int i = e.dim; i < 3; ++i) e.semiaxes(i) = 0.0;
  return e;
}

bool is_radial_segment(const Ellipsoid& e, double tol) {
  if (e.dim >= 2)
    fail(ErrorCode::NotANeedle, "ellipsoid has dimension " + std::to_string(e.dim));
  const auto ends = segment_endpoints(e);
  return ends[0].cross(ends[1]).norm() <= tol;
}

double needle_length(const Ellipsoid& e) {
  if (e.dim >= 2)
    fail(ErrorCode::NotANeedle, "ellipsoid has dimension " + std::to_string(e.dim));
  return 2.0 * e.semiaxes(0);
}

bool contains_origin(const Ellipsoid& e, double tol) {
  const Vector3d q = e.orientation.transpose() * (-e.center);
  double quad = 0.0;
  for (int i = 0; i < 3; ++i) {
    if (i < e.dim) {
      const double u = q(i) / e.semiaxes(i);
      quad += u * u;
    } else if (std::abs(q(i)) > tol) {
      return false;  // origin off the affine span
    }
  }
  return quad <= 1.0 + tol;
}

EllipsoidSize ellipsoid_size(const Ellipsoid& e) {
  EllipsoidSize s;
  s.length = 2.0 * e.semiaxes(0);
  s.area = 4.0 * kPi * e.semiaxes(0) * e.semiaxes(1);
  s.volume = (4.0 * kPi / 3.0) * e.semiaxes(0) * e.semiaxes(1) * e.semiaxes(2);
  return s;
}

}  // namespace qse
