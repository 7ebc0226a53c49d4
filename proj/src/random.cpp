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

#include "qse/random.hpp"

#include <cmath>

#include "qse/error.hpp"
#include "qse/steering.hpp"

namespace qse {

namespace {

complexd gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  return {n(rng), n(rng)};
}

template <int N>
Eigen::Matrix<complexd, N, N> ginibre(Rng& rng) {
  Eigen::Matrix<complexd, N, N> g;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) g(i, j) = gaussian(rng);
  return g;
}

Matrix3d random_rotation(Rng& rng) {
  // QR of a Gaussian matrix with positive diagonal, determinant fixed to +1.
  Eigen::Matrix3d g;
  std::normal_distribution<double> n(0.0, 1.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = n(rng);
  Eigen::HouseholderQR<Matrix3d> qr(g);
  Matrix3d q = qr.householderQ();
  Matrix3d r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 3; ++i)
    if (r(i, i) < 0.0) q.col(i) *= -1.0;
  if (q.determinant() < 0.0) q.col(2) *= -1.0;
  return q;
}

}  // namespace

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + (stream + 1) * 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

double uniform(Rng& rng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(rng);
}

BlochVector random_unit_vector(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  BlochVector v;
  do {
    v = BlochVector(n(rng), n(rng), n(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Vector2c random_pure_qubit(Rng& rng) {
  Vector2c v;
  do {
    v = Vector2c(gaussian(rng), gaussian(rng));
  } while (v.norm() < 1e-6);
  return v.normalized();
}

Matrix2c random_unitary2(Rng& rng) {
  const Matrix2c g = ginibre<2>(rng);
  Eigen::HouseholderQR<Matrix2c> qr(g);
  Matrix2c q = qr.householderQ();
  Matrix2c r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 2; ++i) q.col(i) *= r(i, i) / std::abs(r(i, i));
  return q;
}

SingleQubitState random_single_qubit_state(Rng& rng) {
  const Matrix2c g = ginibre<2>(rng);
  const Matrix2c m = g * g.adjoint();
  return SingleQubitState(m / m.trace().real());
}

TwoQubitState random_two_qubit_state(Rng& rng) {
  const Matrix4c g = ginibre<4>(rng);
  const Matrix4c m = g * g.adjoint();
  return TwoQubitState(m / m.trace().real());
}

QubitChannel random_cptp_channel(Rng& rng, int env_dim) {
  if (env_dim != 2 && env_dim != 4)
    fail(ErrorCode::DomainError, "environment dimension must be 2 or 4");
  // Haar isometry V : C^2 -> C^2 x C^env; Kraus ops are its environment slices.
  const int rows = 2 * env_dim;
  Eigen::MatrixXcd g(rows, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rows; ++j) g(i, j) = gaussian(rng);
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
  Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, 2);
  std::vector<Matrix2c> ops(env_dim);
  for (int k = 0; k < env_dim; ++k) {
    Matrix2c e;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) e(i, j) = q(i * env_dim + k, j);
    ops[k] = e;
  }
  return channel_from_kraus(ops);
}

QubitChannel random_unital_channel(Rng& rng) {
  const int terms = 2 + static_cast<int>(rng() % 3);
  Eigen::VectorXd w(terms);
  for (int i = 0; i < terms; ++i) w(i) = uniform(rng, 0.05, 1.0);
  w /= w.sum();
  std::vector<Matrix2c> ops;
  for (int i = 0; i < terms; ++i)
    ops.push_back(std::sqrt(w(i)) * random_unitary2(rng));
  return channel_from_kraus(ops);
}

QubitChannel random_decohering_channel(Rng& rng) {
  // Bloch action diag(0,0,m3) + shift (0,0,t3) is CPTP iff |m3| + |t3| <= 1;
  // random rotations on both sides keep it CPTP and rank <= 1.
  const double m3 = uniform(rng, -0.9, 0.9);
  const double budget = 1.0 - std::abs(m3);
  const double t3 = uniform(rng, 0.05 * budget, 0.95 * budget) *
                    (rng() % 2 == 0 ? 1.0 : -1.0);
  Matrix3d m = Matrix3d::Zero();
  m(2, 2) = m3;
  const Matrix3d pre = random_rotation(rng), post = random_rotation(rng);
  return affine_channel(post * m * pre, post * Vector3d(0.0, 0.0, t3));
}

TwoQubitState random_classical_on_b(Rng& rng) {
  const Matrix2c u = random_unitary2(rng);
  return classical_on_b(uniform(rng, 0.1, 0.9), random_single_qubit_state(rng),
                        random_single_qubit_state(rng), u.col(0), u.col(1));
}

TwoQubitState random_needle_state(Rng& rng) {
  for (int attempt = 0; attempt < 200; ++attempt) {
    const TwoQubitState s = two_component_state(
        uniform(rng, 0.15, 0.85), random_single_qubit_state(rng),
        random_single_qubit_state(rng), random_single_qubit_state(rng),
        random_single_qubit_state(rng));
    const Ellipsoid eb = steering_ellipsoid(s, Side::B);
    if (eb.dim != 1 || needle_length(eb) < 0.05) continue;
    Eigen::JacobiSVD<Matrix4d> svd(s.theta().theta);
    if (svd.singularValues()(2) > 1e-10 * svd.singularValues()(0)) continue;
    return s;
  }
  fail(ErrorCode::DomainError, "needle sampling failed to converge");
}

TwoQubitState random_plus_zero_state(Rng& rng) {
  const SingleQubitState plus =
      SingleQubitState::from_bloch(BlochVector(1.0, 0.0, 0.0));
  const SingleQubitState zero =
      SingleQubitState::from_bloch(BlochVector(0.0, 0.0, 1.0));
  // Keep the two B factors clearly distinct and clearly noncommuting so the
  // mixture sits a measurable distance from every zero-discord state; nearly
  // collinear or nearly maximally mixed factors can be quantum in principle
  // while falling below any practical detection threshold.
  for (int attempt = 0; attempt < 200; ++attempt) {
    const SingleQubitState b0 = random_single_qubit_state(rng);
    const SingleQubitState b1 = random_single_qubit_state(rng);
    const BlochVector r0 = b0.bloch(), r1 = b1.bloch();
    if (r0.norm() < 0.15 || r1.norm() < 0.15) continue;
    if (r0.cross(r1).norm() < 0.05) continue;
    return two_component_state(0.5, plus, b0, zero, b1);
  }
  fail(ErrorCode::DomainError, "could not sample a generic two-component state");
}

TwoQubitState random_x_state(Rng& rng) {
  const Matrix4c g = ginibre<4>(rng);
  Matrix4c m = g * g.adjoint();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i != j && i + j != 3) m(i, j) = 0.0;  // pinch preserves positivity
  return TwoQubitState(m / m.trace().real());
}

std::array<double, 3> random_bell_diagonal_c(Rng& rng) {
  // Convex combination of the tetrahedron vertices in c-space.
  static const std::array<Vector3d, 4> vertex = {
      Vector3d(1, 1, -1), Vector3d(1, -1, 1), Vector3d(-1, 1, 1),
      Vector3d(-1, -1, -1)};
  Eigen::Vector4d w;
  for (int i = 0; i < 4; ++i) w(i) = uniform(rng, 0.0, 1.0);
  w /= w.sum();
  Vector3d c = Vector3d::Zero();
  for (int i = 0; i < 4; ++i) c += w(i) * vertex[i];
  return {c(0), c(1), c(2)};
}

TwoQubitState random_bell_diagonal_state(Rng& rng) {
  const auto c = random_bell_diagonal_c(rng);
  return bell_diagonal_state(c[0], c[1], c[2]);
}

}  // namespace qse
