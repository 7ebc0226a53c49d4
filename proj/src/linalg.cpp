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

#include "qse/linalg.hpp"

#include <array>

#include "qse/error.hpp"

namespace qse {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::NotAState: return "NotAState";
    case ErrorCode::NotTracePreserving: return "NotTracePreserving";
    case ErrorCode::NotCompletelyPositive: return "NotCompletelyPositive";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ZeroProbabilityOutcome: return "ZeroProbabilityOutcome";
    case ErrorCode::ProductStateDegenerate: return "ProductStateDegenerate";
    case ErrorCode::NotANeedle: return "NotANeedle";
    case ErrorCode::NotANeedleState: return "NotANeedleState";
    case ErrorCode::DecompositionInfeasible: return "DecompositionInfeasible";
    case ErrorCode::NotXState: return "NotXState";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "UnknownError";
}

const Matrix2c& pauli(int mu) {
  static const std::array<Matrix2c, 4> sigma = [] {
    std::array<Matrix2c, 4> s;
    const complexd i(0.0, 1.0);
    s[0] << 1, 0, 0, 1;
    s[1] << 0, 1, 1, 0;
    s[2] << 0, -i, i, 0;
    s[3] << 1, 0, 0, -1;
    return s;
  }();
  return sigma.at(static_cast<size_t>(mu));
}

Matrix4c kron(const Matrix2c& a, const Matrix2c& b) {
  Matrix4c out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
  return out;
}

namespace {

template <typename M>
double hermiticity_defect_impl(const M& m) {
  return (m - m.adjoint()).template lpNorm<Eigen::Infinity>();
}

template <typename M>
double min_eigenvalue_impl(const M& m) {
  Eigen::SelfAdjointEigenSolver<M> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

double hermiticity_defect(const Matrix2c& m) { return hermiticity_defect_impl(m); }
double hermiticity_defect(const Matrix4c& m) { return hermiticity_defect_impl(m); }

double min_eigenvalue(const Matrix2c& m) { return min_eigenvalue_impl(m); }
double min_eigenvalue(const Matrix4c& m) { return min_eigenvalue_impl(m); }

Matrix2c inverse_sqrt(const Matrix2c& m) {
  Eigen::SelfAdjointEigenSolver<Matrix2c> es(m);
  const auto& ev = es.eigenvalues();
  if (ev.minCoeff() <= 0.0)
    fail(ErrorCode::ProductStateDegenerate,
         "inverse square root of a singular matrix");
  Eigen::Vector2d inv = ev.cwiseSqrt().cwiseInverse();
  return es.eigenvectors() * inv.asDiagonal() * es.eigenvectors().adjoint();
}

Matrix2c density_from_bloch(const BlochVector& r) {
  Matrix2c rho = pauli(0);
  for (int k = 0; k < 3; ++k) rho += r(k) * pauli(k + 1);
  return 0.5 * rho;
}

BlochVector bloch_from_density(const Matrix2c& rho) {
  BlochVector r;
  for (int k = 0; k < 3; ++k) r(k) = (rho * pauli(k + 1)).trace().real();
  return r;
}

}  // namespace qse
