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

#include <vector>

#include "qse/pauli.hpp"

namespace qse {

// Taxonomy by singular-value structure of the Bloch-ball action (M, t):
//   Unital               t = 0
//   CompletelyDecohering rank(M) <= 1 and t parallel to the output direction
//   DiscordCreating      everything else
enum class ChannelClass { Unital, CompletelyDecohering, DiscordCreating };

const char* channel_class_name(ChannelClass c);

// A CPTP qubit channel held in both representations: a Kraus set
// {E_k} (sum E_k^dag E_k = I) and the equivalent Bloch-ball affine action
// r -> M r + t.  Constructed via the factory functions below.
class QubitChannel {
 public:
  const std::vector<Matrix2c>& kraus() const { return kraus_; }
  const Matrix3d& linear_part() const { return M_; }
  const Vector3d& translation() const { return t_; }

  // sum_k E_k X E_k^dag for an arbitrary (not necessarily Hermitian) 2x2 X.
  Matrix2c apply_raw(const Matrix2c& x) const;
  SingleQubitState apply(const SingleQubitState& state) const;

 private:
  friend QubitChannel channel_from_kraus(const std::vector<Matrix2c>&);
  QubitChannel(std::vector<Matrix2c> kraus, const Matrix3d& m, const Vector3d& t)
      : kraus_(std::move(kraus)), M_(m), t_(t) {}

  std::vector<Matrix2c> kraus_;
  Matrix3d M_;
  Vector3d t_;
};

QubitChannel identity_channel();

// Validates trace preservation (sum E^dag E = I within 1e-10); derives (M, t).
// Throws NotTracePreserving otherwise.
QubitChannel channel_from_kraus(const std::vector<Matrix2c>& ops);

// Amplitude damping with decay probability p in [0, 1]:
// M = diag(sqrt(1-p), sqrt(1-p), 1-p), t = (0, 0, p).
QubitChannel amplitude_damping(double p);

// Decay probability for evolution time t at rate gamma: p = 1 - exp(-gamma t).
double damping_probability(double gamma, double t);

// Builds a channel from its Bloch-ball action.  Throws NotCompletelyPositive
// when (M, t) is not realizable (Choi matrix has an eigenvalue < -1e-10).
QubitChannel affine_channel(const Matrix3d& m, const Vector3d& t);

// Composition: `then` after `first` (affine action M2 M1 r + M2 t1 + t2).
QubitChannel compose(const QubitChannel& first, const QubitChannel& then);

// Choi matrix sum_ij |i><j| x L(|i><j|), basis input x output.
Matrix4c choi_matrix(const QubitChannel& channel);

// Kraus operators from an (approximately) PSD Choi matrix; eigenvalues below
// `cutoff` are dropped.
std::vector<Matrix2c> kraus_from_choi(const Matrix4c& choi, double cutoff = 1e-12);

// (I x Lambda) rho via the Kraus representation.
TwoQubitState apply_local_b(const TwoQubitState& state, const QubitChannel& channel);

// Same map evaluated purely on Pauli coefficients:
// a' = a, b' = M b + t, T' = T M^T + a t^T.  Used as an independent route;
// agrees with apply_local_b to numerical precision.
TwoQubitState apply_local_b_affine(const TwoQubitState& state,
                                   const QubitChannel& channel);

ChannelClass classify(const QubitChannel& channel);

}  // namespace qse
