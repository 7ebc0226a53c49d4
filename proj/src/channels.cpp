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

#include "qse/channels.hpp"

#include <cmath>
#include <functional>

namespace qse {

namespace {

constexpr double kTpTol = 1e-10;
constexpr double kChoiTol = 1e-10;
constexpr double kTranslationZeroTol = 1e-10;
constexpr double kSvZeroRel = 1e-9;

// Bloch-ball action of a Kraus map: M(j,k) = tr(s_j L(s_k)) / 2, t = Bloch of L(I/2).
void affine_from_kraus(const std::vector<Matrix2c>& ops, Matrix3d& m, Vector3d& t) {
  auto lambda = [&ops](const Matrix2c& x) {
    Matrix2c out = Matrix2c::Zero();
    for (const auto& e : ops) out += e * x * e.adjoint();
    return out;
  };
  const Matrix2c li = lambda(pauli(0));
  for (int j = 0; j < 3; ++j) t(j) = 0.5 * (li * pauli(j + 1)).trace().real();
  for (int k = 0; k < 3; ++k) {
    const Matrix2c lk = lambda(pauli(k + 1));
    for (int j = 0; j < 3; ++j)
      m(j, k) = 0.5 * (lk * pauli(j + 1)).trace().real();
  }
}

// L(X) for the affine action, extended to arbitrary complex 2x2 X by linearity:
// X = (tr X) I/2 + sum_k x_k s_k / 2 with x_k = tr(s_k X).
Matrix2c apply_affine(const Matrix3d& m, const Vector3d& t, const Matrix2c& x) {
  const complexd trace = x.trace();
  Eigen::Vector3cd coeff;
  for (int k = 0; k < 3; ++k) coeff(k) = (pauli(k + 1) * x).trace();
  Matrix2c out = 0.5 * trace * pauli(0);
  for (int j = 0; j < 3; ++j) {
    complexd c = trace * t(j);
    for (int k = 0; k < 3; ++k) c += m(j, k) * coeff(k);
    out += 0.5 * c * pauli(j + 1);
  }
  return out;
}

Matrix4c choi_from_apply(const std::function<Matrix2c(const Matrix2c&)>& lambda) {
  Matrix4c choi = Matrix4c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Matrix2c eij = Matrix2c::Zero();
      eij(i, j) = 1.0;
      choi += kron(eij, lambda(eij));
    }
  return choi;
}

}  // namespace

const char* channel_class_name(ChannelClass c) {
  switch (c) {
    case ChannelClass::Unital: return "Unital";
    case ChannelClass::CompletelyDecohering: return "CompletelyDecohering";
    case ChannelClass::DiscordCreating: return "DiscordCreating";
  }
  return "Unknown";
}

Matrix2c QubitChannel::apply_raw(const Matrix2c& x) const {
  Matrix2c out = Matrix2c::Zero();
  for (const auto& e : kraus_) out += e * x * e.adjoint();
  return out;
}

SingleQubitState QubitChannel::apply(const SingleQubitState& state) const {
  return SingleQubitState(apply_raw(state.density()));
}

QubitChannel identity_channel() {
  return channel_from_kraus({Matrix2c::Identity()});
}

QubitChannel channel_from_kraus(const std::vector<Matrix2c>& ops) {
  if (ops.empty())
    fail(ErrorCode::NotTracePreserving, "empty Kraus set");
  Matrix2c sum = Matrix2c::Zero();
  for (const auto& e : ops) {
    if (!e.allFinite())
      fail(ErrorCode::NotTracePreserving, "non-finite Kraus operator");
    sum += e.adjoint() * e;
  }
  const double defect = (sum - Matrix2c::Identity()).lpNorm<Eigen::Infinity>();
  if (defect > kTpTol)
    fail(ErrorCode::NotTracePreserving,
         "sum E^dag E deviates from identity by " + std::to_string(defect));
  Matrix3d m;
  Vector3d t;
  affine_from_kraus(ops, m, t);
  return QubitChannel(ops, m, t);
}

QubitChannel amplitude_damping(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    fail(ErrorCode::DomainError, "damping probability " + std::to_string(p));
  Matrix2c e0 = Matrix2c::Zero(), e1 = Matrix2c::Zero();
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - p);
  e1(0, 1) = std::sqrt(p);
  return channel_from_kraus({e0, e1});
}

double damping_probability(double gamma, double t) {
  if (gamma < 0.0 || t < 0.0)
    fail(ErrorCode::DomainError, "negative rate or time");
  return 1.0 - std::exp(-gamma * t);
}

QubitChannel affine_channel(const Matrix3d& m, const Vector3d& t) {
  const Matrix4c choi =
      choi_from_apply([&](const Matrix2c& x) { return apply_affine(m, t, x); });
  const double min_ev = min_eigenvalue(choi);
  if (min_ev < -kChoiTol)
    fail(ErrorCode::NotCompletelyPositive,
         "Choi matrix has eigenvalue " + std::to_string(min_ev));
  return channel_from_kraus(kraus_from_choi(choi));
}

QubitChannel compose(const QubitChannel& first, const QubitChannel& then) {
  const Matrix4c choi = choi_from_apply(
      [&](const Matrix2c& x) { return then.apply_raw(first.apply_raw(x)); });
  return channel_from_kraus(kraus_from_choi(choi));
}

Matrix4c choi_matrix(const QubitChannel& channel) {
  return choi_from_apply(
      [&](const Matrix2c& x) { return channel.apply_raw(x); });
}

std::vector<Matrix2c> kraus_from_choi(const Matrix4c& choi, double cutoff) {
  if (hermiticity_defect(choi) > 1e-9)
    fail(ErrorCode::NotCompletelyPositive, "Choi matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(0.5 * (choi + choi.adjoint()));
  if (es.eigenvalues().minCoeff() < -kChoiTol)
    fail(ErrorCode::NotCompletelyPositive,
         "Choi matrix has eigenvalue " + std::to_string(es.eigenvalues().minCoeff()));
  std::vector<Matrix2c> ops;
  for (int k = 3; k >= 0; --k) {  // descending eigenvalues
    const double ev = es.eigenvalues()(k);
    if (ev <= cutoff) continue;
    const Eigen::Vector4cd v = std::sqrt(ev) * es.eigenvectors().col(k);
    Matrix2c e;
    // Choi column vector components v(2i + a) = E(a, i).
    for (int i = 0; i < 2; ++i)
      for (int a = 0; a < 2; ++a) e(a, i) = v(2 * i + a);
    ops.push_back(e);
  }
  return ops;
}

TwoQubitState apply_local_b(const TwoQubitState& state, const QubitChannel& channel) {
  Matrix4c out = Matrix4c::Zero();
  for (const auto& e : channel.kraus()) {
    const Matrix4c k = kron(Matrix2c::Identity(), e);
    out += k * state.density() * k.adjoint();
  }
  return TwoQubitState(out);
}

TwoQubitState apply_local_b_affine(const TwoQubitState& state,
                                   const QubitChannel& channel) {
  const PauliTheta& th = state.theta();
  const Matrix3d& m = channel.linear_part();
  const Vector3d& t = channel.translation();
  PauliTheta out;
  out.theta.block<3, 1>(1, 0) = th.a();
  out.theta.block<1, 3>(0, 1) = (m * th.b() + t).transpose();
  out.theta.block<3, 3>(1, 1) =
      th.correlation() * m.transpose() + th.a() * t.transpose();
  return density_from_theta(out);
}

ChannelClass classify(const QubitChannel& channel) {
  const Vector3d& t = channel.translation();
  if (t.norm() <= kTranslationZeroTol) return ChannelClass::Unital;

  Eigen::JacobiSVD<Matrix3d> svd(channel.linear_part(),
                                 Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Vector3d sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < 3; ++i)
    if (sv(i) > kSvZeroRel * sv(0)) ++rank;
  if (sv(0) <= 0.0) rank = 0;

  if (rank == 0) return ChannelClass::CompletelyDecohering;
  if (rank == 1) {
    // Output of the ball is a segment along the top left-singular direction;
    // decohering requires the shift not to tilt it off that line.
    const Vector3d u = svd.matrixU().col(0);
    const Vector3d perp = t - u * u.dot(t);
    if (perp.norm() <= kTranslationZeroTol) return ChannelClass::CompletelyDecohering;
  }
  return ChannelClass::DiscordCreating;
}

}  // namespace qse
