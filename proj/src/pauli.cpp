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

#include "qse/pauli.hpp"

#include <cmath>
#include <limits>

namespace qse {

namespace {

constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-10;

// Hermitize, clip eigenvalues that are negative within tolerance, renormalize.
template <typename M>
M canonicalize(const M& rho) {
  M h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<M> es(h);
  if (es.eigenvalues().minCoeff() < 0.0) {
    auto ev = es.eigenvalues().cwiseMax(0.0).eval();
    h = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  }
  h /= h.trace().real();
  return 0.5 * (h + h.adjoint()).eval();
}

template <typename M>
ValidationReport validate_impl(const M& rho) {
  ValidationReport r;
  if (!rho.allFinite()) {
    r.hermiticity_defect = std::numeric_limits<double>::infinity();
    r.trace_defect = std::numeric_limits<double>::infinity();
    r.min_eigenvalue = -std::numeric_limits<double>::infinity();
    return r;
  }
  r.hermiticity_defect = hermiticity_defect(rho);
  r.trace_defect = std::abs(rho.trace().real() - 1.0) + std::abs(rho.trace().imag());
  const M h = 0.5 * (rho + rho.adjoint());
  r.min_eigenvalue = min_eigenvalue(h);
  r.passed = r.hermiticity_defect <= kHermTol && r.trace_defect <= kTraceTol &&
             r.min_eigenvalue >= -kPsdTol;
  return r;
}

template <typename M>
void check_or_throw(const M& rho, const char* what) {
  const ValidationReport r = validate_impl(rho);
  if (r.hermiticity_defect > kHermTol)
    fail(ErrorCode::InvalidState,
         std::string(what) + " is not Hermitian (defect " +
             std::to_string(r.hermiticity_defect) + ")");
  if (r.trace_defect > kTraceTol)
    fail(ErrorCode::InvalidState,
         std::string(what) + " has trace defect " + std::to_string(r.trace_defect));
  if (r.min_eigenvalue < -kPsdTol)
    fail(ErrorCode::NotAState,
         std::string(what) + " has eigenvalue " + std::to_string(r.min_eigenvalue));
}

}  // namespace

SingleQubitState::SingleQubitState() : rho_(0.5 * Matrix2c::Identity()) {}

SingleQubitState::SingleQubitState(const Matrix2c& rho) {
  check_or_throw(rho, "qubit density matrix");
  rho_ = canonicalize(rho);
}

SingleQubitState SingleQubitState::from_bloch(const BlochVector& r) {
  double n = r.norm();
  if (n > 1.0 + 1e-9)
    fail(ErrorCode::NotAState, "Bloch vector of norm " + std::to_string(n));
  BlochVector v = n > 1.0 ? (r / n).eval() : r;
  return SingleQubitState(density_from_bloch(v));
}

SingleQubitState SingleQubitState::pure(const Vector2c& psi) {
  double n = psi.norm();
  if (n < 1e-12) fail(ErrorCode::DomainError, "zero state vector");
  Vector2c u = psi / n;
  return SingleQubitState((u * u.adjoint()).eval());
}

double SingleQubitState::purity() const {
  return (rho_ * rho_).trace().real();
}

TwoQubitState::TwoQubitState() : TwoQubitState(0.25 * Matrix4c::Identity()) {}

TwoQubitState::TwoQubitState(const Matrix4c& rho) {
  check_or_throw(rho, "two-qubit density matrix");
  rho_ = canonicalize(rho);
  Matrix4d th;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      th(mu, nu) = (rho_ * kron(pauli(mu), pauli(nu))).trace().real();
  th(0, 0) = 1.0;
  theta_ = PauliTheta(th);
}

ValidationReport validate_state(const Matrix4c& rho) { return validate_impl(rho); }

PauliTheta theta_from_density(const TwoQubitState& state) { return state.theta(); }

TwoQubitState density_from_theta(const PauliTheta& theta) {
  if (std::abs(theta.theta(0, 0) - 1.0) > 1e-9)
    fail(ErrorCode::InvalidState, "coefficient (0,0) must be 1, got " +
                                      std::to_string(theta.theta(0, 0)));
  Matrix4c rho = Matrix4c::Zero();
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu)
      rho += theta.theta(mu, nu) * kron(pauli(mu), pauli(nu));
  rho *= 0.25;
  return TwoQubitState(rho);  // PSD check happens here
}

SingleQubitState reduced_state(const TwoQubitState& state, Side side) {
  const Matrix4c& rho = state.density();
  Matrix2c red = Matrix2c::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        red(i, j) += side == Side::A ? rho(2 * i + k, 2 * j + k)
                                     : rho(2 * k + i, 2 * k + j);
  return SingleQubitState(red);
}

TwoQubitState bell_diagonal_state(double c1, double c2, double c3) {
  PauliTheta th;
  th.theta(1, 1) = c1;
  th.theta(2, 2) = c2;
  th.theta(3, 3) = c3;
  return density_from_theta(th);
}

TwoQubitState product_state(const SingleQubitState& a, const SingleQubitState& b) {
  return TwoQubitState(kron(a.density(), b.density()));
}

TwoQubitState two_component_state(double p0, const SingleQubitState& a0,
                                  const SingleQubitState& b0,
                                  const SingleQubitState& a1,
                                  const SingleQubitState& b1) {
  if (p0 < 0.0 || p0 > 1.0)
    fail(ErrorCode::DomainError, "mixing weight " + std::to_string(p0));
  Matrix4c rho = p0 * kron(a0.density(), b0.density()) +
                 (1.0 - p0) * kron(a1.density(), b1.density());
  return TwoQubitState(rho);
}

TwoQubitState classical_on_b(double p0, const SingleQubitState& a0,
                             const SingleQubitState& a1, const Vector2c& phi0,
                             const Vector2c& phi1) {
  if (std::abs(phi0.norm() - 1.0) > 1e-10 || std::abs(phi1.norm() - 1.0) > 1e-10 ||
      std::abs(phi0.dot(phi1)) > 1e-10)
    fail(ErrorCode::DomainError, "basis vectors must be orthonormal");
  return two_component_state(p0, a0, SingleQubitState::pure(phi0), a1,
                             SingleQubitState::pure(phi1));
}

}  // namespace qse
