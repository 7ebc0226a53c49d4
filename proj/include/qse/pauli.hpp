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

#pragma once

#include "qse/error.hpp"
#include "qse/linalg.hpp"

namespace qse {

enum class Side { A, B };

// Diagnostics from checking a candidate density matrix.  `passed` requires
// hermiticity_defect <= 1e-12, |trace - 1| <= 1e-12 and min_eigenvalue >= -1e-10.
struct ValidationReport {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool passed = false;
};

// Pauli coefficient matrix of a two-qubit state, theta(mu,nu) = tr(rho s_mu x s_nu),
// in block form { {1, b^T}, {a, T} }: column a is the A-side Bloch vector, row b
// the B-side one, and T the 3x3 correlation block.
struct PauliTheta {
  PauliTheta() {
    theta.setZero();
    theta(0, 0) = 1.0;
  }
  explicit PauliTheta(const Matrix4d& m) : theta(m) {}

  Matrix4d theta;

  BlochVector a() const { return theta.block<3, 1>(1, 0); }
  BlochVector b() const { return theta.block<1, 3>(0, 1).transpose(); }
  Matrix3d correlation() const { return theta.block<3, 3>(1, 1); }
};

// A qubit density matrix, validated and canonicalized on construction
// (Hermitized, negative eigenvalues within tolerance clipped, trace fixed).
// Throws InvalidState / NotAState when the input is beyond tolerance.
class SingleQubitState {
 public:
  SingleQubitState();  // maximally mixed
  explicit SingleQubitState(const Matrix2c& rho);

  // |r| <= 1 required (up to 1e-9, renormalized onto the ball).
  static SingleQubitState from_bloch(const BlochVector& r);
  static SingleQubitState pure(const Vector2c& psi);

  const Matrix2c& density() const { return rho_; }
  BlochVector bloch() const { return bloch_from_density(rho_); }
  double purity() const;

 private:
  Matrix2c rho_;
};

// A two-qubit density matrix with its Pauli coefficient matrix cached.
// Construction validates and canonicalizes exactly like SingleQubitState.
class TwoQubitState {
 public:
  TwoQubitState();  // maximally mixed
  explicit TwoQubitState(const Matrix4c& rho);

  const Matrix4c& density() const { return rho_; }
  const PauliTheta& theta() const { return theta_; }

 private:
  Matrix4c rho_;
  PauliTheta theta_;
};

ValidationReport validate_state(const Matrix4c& rho);

PauliTheta theta_from_density(const TwoQubitState& state);

// Inverse of theta_from_density.  Requires theta(0,0) = 1 (within 1e-9) and a
// PSD reconstruction; throws InvalidState / NotAState otherwise.
TwoQubitState density_from_theta(const PauliTheta& theta);

// Partial trace over the complementary subsystem.
SingleQubitState reduced_state(const TwoQubitState& state, Side side);

// Convenience constructors ----------------------------------------------------

// State with theta = diag(1, c1, c2, c3); throws NotAState outside the tetrahedron.
TwoQubitState bell_diagonal_state(double c1, double c2, double c3);

TwoQubitState product_state(const SingleQubitState& a, const SingleQubitState& b);

// p0 * a0 x b0 + (1-p0) * a1 x b1
TwoQubitState two_component_state(double p0, const SingleQubitState& a0,
                                  const SingleQubitState& b0,
                                  const SingleQubitState& a1,
                                  const SingleQubitState& b1);

// Zero-discord-on-B mixture p0 * a0 x |phi0><phi0| + (1-p0) * a1 x |phi1><phi1|
// with {phi0, phi1} orthonormal (checked to 1e-10).
TwoQubitState classical_on_b(double p0, const SingleQubitState& a0,
                             const SingleQubitState& a1, const Vector2c& phi0,
                             const Vector2c& phi1);

}  // namespace qse
