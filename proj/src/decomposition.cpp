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

#include "qse/decomposition.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "qse/correlations.hpp"

namespace qse {

namespace {

constexpr double kRankZeroRel = 1e-9;
constexpr double kWeightFloor = 1e-10;
constexpr double kResidualTol = 1e-9;

int theta_rank(const PauliTheta& th) {
  Eigen::JacobiSVD<Matrix4d> svd(th.theta);
  const Eigen::Vector4d sv = svd.singularValues();
  if (sv(0) <= 0.0) return 0;
  int rank = 0;
  for (int i = 0; i < 4; ++i)
    if (sv(i) > kRankZeroRel * sv(0)) ++rank;
  return rank;
}

Eigen::Vector4d homogeneous(const BlochVector& r) {
  Eigen::Vector4d v;
  v << 1.0, r(0), r(1), r(2);
  return v;
}

}  // namespace

NeedleDecomposition needle_decompose(const TwoQubitState& state) {
  const PauliTheta& th = state.theta();
  const int rank = theta_rank(th);
  if (rank != 2)
    fail(ErrorCode::NotANeedleState,
         "coefficient matrix has rank " + std::to_string(rank));

  const Ellipsoid eb = steering_ellipsoid(state, Side::B);
  if (eb.dim != 1)
    fail(ErrorCode::NotANeedleState,
         "B steering set has dimension " + std::to_string(eb.dim));

  // The B components sit at the needle endpoints; solving
  // theta^T = [bh0 bh1] * [X0 X1]^T in the least-squares sense recovers the
  // weighted A-side coefficient vectors X_i = p_i * (1, alpha_i).
  const BlochVector axis = eb.semiaxes(0) * eb.orientation.col(0);
  const std::array<BlochVector, 2> beta{eb.center + axis, eb.center - axis};
  Eigen::Matrix<double, 4, 2> basis;
  basis.col(0) = homogeneous(beta[0]);
  basis.col(1) = homogeneous(beta[1]);
  const Eigen::Matrix<double, 2, 4> x =
      basis.colPivHouseholderQr().solve(th.theta.transpose()).eval();

  NeedleDecomposition d;
  Matrix4d reconstructed = Matrix4d::Zero();
  for (int i = 0; i < 2; ++i) {
    const Eigen::Vector4d xi = x.row(i).transpose();
    const double p = xi(0);
    if (p < kWeightFloor)
      fail(ErrorCode::DecompositionInfeasible,
           "component weight " + std::to_string(p));
    BlochVector alpha = xi.tail<3>() / p;
    if (alpha.norm() > 1.0 + 1e-9)
      fail(ErrorCode::DecompositionInfeasible,
           "component Bloch norm " + std::to_string(alpha.norm()));
    d.p[i] = p;
    d.component_a[i] = SingleQubitState::from_bloch(alpha);
    d.component_b[i] = SingleQubitState::from_bloch(beta[i]);
    reconstructed += xi * homogeneous(beta[i]).transpose();
  }

  const double theta_residual = (reconstructed - th.theta).norm();
  Matrix4c rho_rec = Matrix4c::Zero();
  for (int i = 0; i < 2; ++i)
    rho_rec += d.p[i] * kron(d.component_a[i].density(), d.component_b[i].density());
  d.residual = std::max(theta_residual / 4.0, (rho_rec - state.density()).norm());
  if (d.residual > kResidualTol)
    fail(ErrorCode::DecompositionInfeasible,
         "reconstruction residual " + std::to_string(d.residual));
  return d;
}

PreparationRecipe build_preparation(const NeedleDecomposition& d) {
  PreparationRecipe r;

  std::array<Vector2c, 2> basis{Vector2c(1.0, 0.0), Vector2c(0.0, 1.0)};
  std::vector<Matrix2c> kraus;
  for (int i = 0; i < 2; ++i) {
    Eigen::SelfAdjointEigenSolver<Matrix2c> es(d.component_b[i].density());
    // Eigenvalues ascending: col(1) is the dominant eigvector psi_i.
    r.lambda[i] = es.eigenvalues()(1);
    r.psi[i] = es.eigenvectors().col(1);
    r.psi_perp[i] = es.eigenvectors().col(0);
    if (r.lambda[i] > 0.0)
      kraus.push_back(std::sqrt(r.lambda[i]) *
                      (r.psi[i] * basis[i].adjoint()));
    if (r.lambda[i] < 1.0)
      kraus.push_back(std::sqrt(1.0 - r.lambda[i]) *
                      (r.psi_perp[i] * basis[i].adjoint()));
  }
  r.channel = channel_from_kraus(kraus);
  r.classical_state = classical_on_b(d.p[0], d.component_a[0], d.component_a[1],
                                     basis[0], basis[1]);
  return r;
}

TheoremReport verify_theorem(const TwoQubitState& state) {
  TheoremReport rep;
  const Ellipsoid eb = steering_ellipsoid(state, Side::B);
  rep.eb_dim = eb.dim;
  rep.radial = eb.dim <= 1 && is_radial_segment(eb);
  rep.discord = discord_b_numeric(state).discord;
  rep.applicable = eb.dim == 1 && theta_rank(state.theta()) == 2;
  rep.decomposition_residual = std::numeric_limits<double>::quiet_NaN();
  rep.preparation_residual = std::numeric_limits<double>::quiet_NaN();

  if (rep.applicable) {
    try {
      const NeedleDecomposition d = needle_decompose(state);
      const PreparationRecipe recipe = build_preparation(d);
      const TwoQubitState rebuilt =
          apply_local_b(recipe.classical_state, recipe.channel);
      rep.decomposed = true;
      rep.decomposition_residual = d.residual;
      rep.preparation_residual =
          (rebuilt.density() - state.density()).norm();
    } catch (const Error&) {
      rep.decomposed = false;
    }
  }

  // Discordant needles must be non-radial and preparable from a B-classical
  // state through a local channel; (near-)zero-discord ones must be radial.
  bool ok = true;
  if (rep.eb_dim <= 1) {
    if (rep.discord > 1e-4)
      ok = !rep.radial &&
           (!rep.applicable ||
            (rep.decomposed && rep.preparation_residual <= 1e-6));
    if (rep.discord < 1e-6) ok = ok && rep.radial;
  }
  rep.consistent = ok;
  return rep;
}

}  // namespace qse
