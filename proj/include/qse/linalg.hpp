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

#include <complex>

#include <Eigen/Dense>

namespace qse {

using complexd = std::complex<double>;
using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;
using Matrix3d = Eigen::Matrix3d;
using Matrix4d = Eigen::Matrix4d;
using Vector3d = Eigen::Vector3d;
using Vector2c = Eigen::Vector2cd;

// Bloch vector of a qubit: (<sx>, <sy>, <sz>).
using BlochVector = Eigen::Vector3d;

// Pauli basis (s0, s1, s2, s3) = (I, X, Y, Z) in the computational basis.
const Matrix2c& pauli(int mu);

Matrix4c kron(const Matrix2c& a, const Matrix2c& b);

// max_ij |m(i,j) - conj(m(j,i))|
double hermiticity_defect(const Matrix2c& m);
double hermiticity_defect(const Matrix4c& m);

double min_eigenvalue(const Matrix2c& hermitian);
double min_eigenvalue(const Matrix4c& hermitian);

// Principal inverse square root of a positive-definite Hermitian 2x2 matrix.
Matrix2c inverse_sqrt(const Matrix2c& m);

// 2x2 density matrix <-> Bloch vector.
Matrix2c density_from_bloch(const BlochVector& r);
BlochVector bloch_from_density(const Matrix2c& rho);

}  // namespace qse
