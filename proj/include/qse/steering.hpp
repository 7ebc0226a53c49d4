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

#include "qse/channels.hpp"
#include "qse/pauli.hpp"

namespace qse {

// Steering ellipsoid in the Bloch ball: center + orientation * diag(semiaxes) * unit ball.
// Semiaxes are sorted descending; orientation columns are the axis directions,
// canonicalized so each column's first non-negligible component is positive.
// dim is rank(Theta) - 1 (0 for a point); semiaxes beyond dim are exactly 0.
struct Ellipsoid {
  BlochVector center = BlochVector::Zero();
  Vector3d semiaxes = Vector3d::Zero();
  Matrix3d orientation = Matrix3d::Identity();
  int dim = 0;
};

// Post-measurement state of the steered party: outcome probability and the
// conditioned Bloch vector.
struct SteeredOutcome {
  double probability = 0.0;
  BlochVector bloch = BlochVector::Zero();
};

struct EllipsoidSize {
  double length = 0.0;  // 2 * s1
  double area = 0.0;    // 4 pi s1 s2
  double volume = 0.0;  // (4 pi / 3) s1 s2 s3
};

// Conditions `steered_side` on a projective outcome along unit vector x measured
// on the other side.  Throws DomainError for non-unit x (|x| - 1 beyond 1e-9)
// and ZeroProbabilityOutcome when the outcome probability is below 1e-12.
SteeredOutcome steered_state(const TwoQubitState& state, const BlochVector& x,
                             Side steered_side);

// Local-filtering normal form: conjugates the *other* side by (2 rho)^(-1/2) so
// its marginal becomes maximally mixed.  Requires that marginal to be full rank
// (purity gap > 1e-12); throws ProductStateDegenerate otherwise.
TwoQubitState slocc_normalize(const TwoQubitState& state, Side side);

// The set of Bloch vectors side `side` can be steered to.  Product states with
// a pure opposite marginal yield the dim-0 point at that side's own Bloch vector.
Ellipsoid steering_ellipsoid(const TwoQubitState& state, Side side);

// True when the ellipsoid is a point or a segment collinear with the origin
// (|endpoint0 x endpoint1| <= tol).  Throws NotANeedle for dim >= 2.
bool is_radial_segment(const Ellipsoid& e, double tol = 1e-8);

// Length of a dim<=1 ellipsoid (2 * s1).  Throws NotANeedle for dim >= 2.
double needle_length(const Ellipsoid& e);

// True iff the origin lies in the ellipsoid's affine span (within tol) and
// inside the body (quadratic form <= 1 + tol).
bool contains_origin(const Ellipsoid& e, double tol = 1e-9);

EllipsoidSize ellipsoid_size(const Ellipsoid& e);

}  // namespace qse
