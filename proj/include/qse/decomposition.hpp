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

#include <array>

#include "qse/channels.hpp"
#include "qse/pauli.hpp"
#include "qse/steering.hpp"

namespace qse {

// Two-product-term decomposition rho = p0 A0 x B0 + p1 A1 x B1 of a state whose
// coefficient matrix has rank 2.  The B components are the endpoints of the
// B-side steering needle.
struct NeedleDecomposition {
  std::array<double, 2> p{0.5, 0.5};
  std::array<SingleQubitState, 2> component_a;
  std::array<SingleQubitState, 2> component_b;
  double residual = 0.0;  // Frobenius reconstruction error
};

// Measure-and-prepare realization of a needle state from a B-classical one:
// rho = (I x Lambda) classical_state, with Lambda built from the spectral
// decomposition B_i = lambda_i |psi_i><psi_i| + (1 - lambda_i) |psi_i_perp><psi_i_perp|.
struct PreparationRecipe {
  TwoQubitState classical_state;
  QubitChannel channel;
  std::array<double, 2> lambda{1.0, 1.0};
  std::array<Vector2c, 2> psi;
  std::array<Vector2c, 2> psi_perp;

  PreparationRecipe() : channel(identity_channel()) {}
};

// Consistency report tying together needle shape, discord, and preparability.
struct TheoremReport {
  int eb_dim = 0;
  bool radial = false;
  double discord = 0.0;
  bool applicable = false;  // coefficient rank 2, i.e. the needle case
  bool decomposed = false;
  double decomposition_residual = 0.0;
  double preparation_residual = 0.0;
  bool consistent = false;
};

// Decomposes a rank-2-coefficient state over its needle endpoints.  Throws
// NotANeedleState when rank(theta) != 2 and DecompositionInfeasible when the
// induced weights/components fail validity beyond tolerance (weights below
// 1e-10, Bloch norms beyond 1 + 1e-9, residual above 1e-9).
NeedleDecomposition needle_decompose(const TwoQubitState& state);

// Builds the classical state and local channel that prepare the decomposed
// state as (I x Lambda) sum_i p_i A_i x |i><i|.
PreparationRecipe build_preparation(const NeedleDecomposition& d);

// Runs the full chain on any two-qubit state and checks the radial-iff-classical
// consistency conditions (discord > 1e-4 must come with a non-radial needle and
// a valid preparation; discord < 1e-6 must come with a radial one).
TheoremReport verify_theorem(const TwoQubitState& state);

}  // namespace qse
