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

#include "qse/pauli.hpp"

namespace qse {

enum class DiscordMethod { NumericProjective, AnalyticXState };

struct DiscordResult {
  double discord = 0.0;
  // Measurement direction on B attaining the conditional-entropy minimum.
  BlochVector minimizing_direction = BlochVector::UnitZ();
  double conditional_entropy = 0.0;
  DiscordMethod method = DiscordMethod::NumericProjective;
};

// Knobs for the projective-measurement minimizer: hemisphere grid followed by
// Nelder-Mead refinement from the best cell plus seeded random restarts.
struct DiscordOptions {
  int grid_theta = 64;
  int grid_phi = 128;
  double refine_tol = 1e-8;
  int restarts = 5;
  unsigned long long seed = 0x5eed'0d15ull;
};

// Von Neumann entropies in bits.
double von_neumann_entropy(const Matrix2c& rho);
double von_neumann_entropy(const Matrix4c& rho);
// Binary entropy of a Bloch vector of norm r: H((1+r)/2).
double qubit_entropy(double bloch_norm);

// I(A:B) = S(A) + S(B) - S(AB), in bits.
double mutual_information(const TwoQubitState& state);

double trace_distance(const Matrix2c& rho, const Matrix2c& sigma);
double trace_distance(const Matrix4c& rho, const Matrix4c& sigma);

// Wootters concurrence via the spin-flip spectrum.
double concurrence(const TwoQubitState& state);

// All density entries outside the X pattern (diagonal + anti-diagonal) below tol.
bool is_x_state(const TwoQubitState& state, double tol = 1e-10);

// Quantum discord with projective measurements on B, by global numeric
// minimization of the measured conditional entropy.
DiscordResult discord_b_numeric(const TwoQubitState& state,
                                const DiscordOptions& options = {});

// Discord for X states: the optimal direction lies in the plane spanned by e3
// and the top right-singular direction of the xy correlation block, so the
// minimization reduces to one angle (solved by dense scan + golden refinement;
// the sz / in-plane candidate measurements are its boundary points).
// Throws NotXState when the state is not X-shaped.
DiscordResult discord_x_state(const TwoQubitState& state);

// Analytic path for X states, numeric minimizer otherwise.
DiscordResult discord_b(const TwoQubitState& state);

}  // namespace qse
