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
#include <cstdint>
#include <random>

#include "qse/channels.hpp"
#include "qse/pauli.hpp"

namespace qse {

using Rng = std::mt19937_64;

// Decorrelated per-stream seed derived from a master seed (splitmix64 step).
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

double uniform(Rng& rng, double lo, double hi);

BlochVector random_unit_vector(Rng& rng);
Vector2c random_pure_qubit(Rng& rng);
Matrix2c random_unitary2(Rng& rng);

// Ginibre construction G G^dag / tr, full rank almost surely.
SingleQubitState random_single_qubit_state(Rng& rng);
TwoQubitState random_two_qubit_state(Rng& rng);

// Haar-random Stinespring dilation with an environment of dimension env_dim
// (2 or 4; 4 reaches generic channels).
QubitChannel random_cptp_channel(Rng& rng, int env_dim = 4);

// Random convex mixture of 2..4 unitaries (always unital).
QubitChannel random_unital_channel(Rng& rng);

// Random rank<=1 Bloch action diag(0,0,m3) + shift, conjugated by random
// rotations; always CPTP and completely decohering.
QubitChannel random_decohering_channel(Rng& rng);

// p0 A0 x |phi0><phi0| + p1 A1 x |phi1><phi1| with a random orthonormal basis.
TwoQubitState random_classical_on_b(Rng& rng);

// Random mixture of two product terms, rejection-sampled to coefficient rank 2
// with a needle length above 0.05.
TwoQubitState random_needle_state(Rng& rng);

// Equal mixture |+><+| x R0 + |0><0| x R1 with random B factors (rank-2 family
// whose B needle endpoints are the factors' Bloch vectors).
TwoQubitState random_plus_zero_state(Rng& rng);

// Random density pinched to the X pattern (diagonal + anti-diagonal).
TwoQubitState random_x_state(Rng& rng);

std::array<double, 3> random_bell_diagonal_c(Rng& rng);
TwoQubitState random_bell_diagonal_state(Rng& rng);

}  // namespace qse
