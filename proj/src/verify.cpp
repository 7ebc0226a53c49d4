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

#include "qse/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <utility>
#include <vector>

#include "qse/channels.hpp"
#include "qse/correlations.hpp"
#include "qse/decomposition.hpp"
#include "qse/error.hpp"
#include "qse/pauli.hpp"
#include "qse/random.hpp"
#include "qse/scan.hpp"
#include "qse/steering.hpp"

namespace qse {

namespace {

// Per-suite accumulator.  `observe` compares a violation measure against its
// tolerance; `worst` keeps the largest measure seen, passing or not.
struct Check {
  int failures = 0;
  double worst = 0.0;

  void observe(double defect, double limit) {
    worst = std::max(worst, defect);
    if (!(defect <= limit)) ++failures;  // NaN counts as a failure
  }
  void require(bool ok) {
    if (!ok) {
      ++failures;
      worst = std::max(worst, 1.0);
    }
  }
};

using SuiteFn = std::function<void(Check&, Rng&, const VerifyOptions&)>;

struct SuiteSpec {
  const char* name;
  const char* note;  // what `worst` measures and the tolerance it is held to
  SuiteFn fn;
};

Matrix3d quad_form(const Ellipsoid& e) {
  return e.orientation * e.semiaxes.array().square().matrix().asDiagonal() *
         e.orientation.transpose();
}

// Membership defect of `point` in `e`, inflating every semiaxis by `slack` so
// boundary points and degenerate axes test cleanly: <= 0 means inside.
double membership_defect(const Ellipsoid& e, const BlochVector& point,
                         double slack) {
  const Vector3d y = e.orientation.transpose() * (point - e.center);
  double q = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double s = e.semiaxes(i) + slack;
    q += (y(i) / s) * (y(i) / s);
  }
  return q - 1.0;
}

int theta_rank(const TwoQubitState& state) {
  Eigen::JacobiSVD<Matrix4d> svd(state.theta().theta);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-9 * sv(0)) ++rank;
  return rank;
}

// Conjugates side B by an invertible filter and renormalizes.
TwoQubitState filter_on_b(const TwoQubitState& state, const Matrix2c& k) {
  const Matrix4c kk = kron(Matrix2c::Identity(), k);
  const Matrix4c rho = kk * state.density() * kk.adjoint();
  return TwoQubitState(rho / rho.trace().real());
}

TwoQubitState rotate_local(const TwoQubitState& state, const Matrix2c& ua,
                           const Matrix2c& ub) {
  const Matrix4c u = kron(ua, ub);
  return TwoQubitState(u * state.density() * u.adjoint());
}

// Invertible 2x2 with singular values in [0.4, 1]: well-conditioned SLOCC.
Matrix2c random_filter(Rng& rng) {
  const Matrix2c u = random_unitary2(rng);
  const Matrix2c v = random_unitary2(rng);
  Matrix2c d = Matrix2c::Zero();
  d(0, 0) = uniform(rng, 0.4, 1.0);
  d(1, 1) = uniform(rng, 0.4, 1.0);
  return u * d * v.adjoint();
}

// Equal mixture |+><+| x B0 + |0><0| x B1 with both B Bloch vectors on one ray
// through the origin: a zero-discord member of the two-component family.
TwoQubitState collinear_plus_zero_state(Rng& rng) {
  const BlochVector u = random_unit_vector(rng);
  double l0 = uniform(rng, 0.15, 0.9);
  double l1 = uniform(rng, 0.15, 0.9);
  if (uniform(rng, 0.0, 1.0) < 0.5) l1 = -l1;  // opposite side of the origin
  if (std::abs(l0 - l1) < 0.1) l1 = l0 + (l1 > l0 ? 0.1 : -0.1);
  const SingleQubitState plus =
      SingleQubitState::from_bloch(BlochVector(1.0, 0.0, 0.0));
  const SingleQubitState zero =
      SingleQubitState::from_bloch(BlochVector(0.0, 0.0, 1.0));
  return two_component_state(0.5, plus, SingleQubitState::from_bloch(l0 * u),
                             zero, SingleQubitState::from_bloch(l1 * u));
}

double frobenius_gap(const Matrix4c& x, const Matrix4c& y) {
  return (x - y).cwiseAbs().maxCoeff();
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

void suite_pauli_round_trip(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state = random_two_qubit_state(rng);
    const PauliTheta theta = state.theta();
    c.observe(std::abs(theta.theta(0, 0) - 1.0), 0.0);
    c.observe(theta.theta.cwiseAbs().maxCoeff() - 1.0, 1e-12);
    const TwoQubitState back = density_from_theta(theta);
    c.observe((back.theta().theta - theta.theta).cwiseAbs().maxCoeff(), 1e-12);
    c.observe(frobenius_gap(back.density(), state.density()), 1e-12);
  }
}

void suite_pauli_marginals(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state = random_two_qubit_state(rng);
    const BlochVector a = reduced_state(state, Side::A).bloch();
    const BlochVector b = reduced_state(state, Side::B).bloch();
    c.observe((a - state.theta().a()).norm(), 1e-12);
    c.observe((b - state.theta().b()).norm(), 1e-12);
    c.observe(a.norm() - 1.0, 1e-9);
    c.observe(b.norm() - 1.0, 1e-9);
  }
}

void suite_state_validation(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state =
        (i % 3 == 0)   ? random_two_qubit_state(rng)
        : (i % 3 == 1) ? random_x_state(rng)
                       : random_bell_diagonal_state(rng);
    const ValidationReport report = validate_state(state.density());
    c.require(report.passed);
    c.observe(report.hermiticity_defect, 1e-12);
    c.observe(report.trace_defect, 1e-12);
    c.observe(-report.min_eigenvalue, 1e-10);
  }
}

void suite_channel_tp_choi(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const QubitChannel ch = random_cptp_channel(rng, i % 2 == 0 ? 4 : 2);
    Matrix2c sum = Matrix2c::Zero();
    for (const auto& e : ch.kraus()) sum += e.adjoint() * e;
    c.observe((sum - Matrix2c::Identity()).cwiseAbs().maxCoeff(), 1e-10);
    c.observe(-min_eigenvalue(choi_matrix(ch)), 1e-10);

    const SingleQubitState in = random_single_qubit_state(rng);
    const BlochVector via_kraus = ch.apply(in).bloch();
    const BlochVector via_affine = ch.linear_part() * in.bloch() + ch.translation();
    c.observe((via_kraus - via_affine).norm(), 1e-10);
  }
}

void suite_channel_routes(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state = random_two_qubit_state(rng);
    const QubitChannel ch = random_cptp_channel(rng, i % 2 == 0 ? 4 : 2);
    const TwoQubitState kraus_route = apply_local_b(state, ch);
    const TwoQubitState affine_route = apply_local_b_affine(state, ch);
    c.observe(frobenius_gap(kraus_route.density(), affine_route.density()),
              1e-10);
  }
}

void suite_data_processing(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const SingleQubitState r1 = random_single_qubit_state(rng);
    const SingleQubitState r2 = random_single_qubit_state(rng);
    const QubitChannel ch = random_cptp_channel(rng, i % 2 == 0 ? 4 : 2);
    const double before = trace_distance(r1.density(), r2.density());
    const double after =
        trace_distance(ch.apply(r1).density(), ch.apply(r2).density());
    c.observe(after - before, 1e-10);
  }
}

void suite_amplitude_damping(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const double p = uniform(rng, 0.0, 1.0);
    const QubitChannel ad = amplitude_damping(p);
    c.observe(-min_eigenvalue(choi_matrix(ad)), 1e-10);
    const double q = std::sqrt(1.0 - p);
    Matrix3d m = Matrix3d::Zero();
    m(0, 0) = q;
    m(1, 1) = q;
    m(2, 2) = 1.0 - p;
    c.observe((ad.linear_part() - m).cwiseAbs().maxCoeff(), 1e-12);
    c.observe((ad.translation() - Vector3d(0.0, 0.0, p)).norm(), 1e-12);

    const double gamma = uniform(rng, 0.1, 3.0);
    const double t = uniform(rng, 0.0, 3.0);
    c.observe(std::abs(damping_probability(gamma, t) - (1.0 - std::exp(-gamma * t))),
              1e-15);
  }
}

void suite_classifier_taxonomy(Check& c, Rng& rng, const VerifyOptions& o) {
  c.require(classify(identity_channel()) == ChannelClass::Unital);
  for (int i = 0; i < o.trials; ++i) {
    c.require(classify(random_unital_channel(rng)) == ChannelClass::Unital);
    c.require(classify(random_decohering_channel(rng)) ==
              ChannelClass::CompletelyDecohering);
    c.require(classify(amplitude_damping(uniform(rng, 0.05, 0.95))) ==
              ChannelClass::DiscordCreating);
  }
}

void suite_classifier_discord_power(Check& c, Rng& rng, const VerifyOptions& o) {
  // Unital / completely-decohering channels leave B-classical states
  // zero-discord; the discord-creating representative must break at least one.
  double best_created = 0.0;
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState classical = random_classical_on_b(rng);
    const QubitChannel unital = random_unital_channel(rng);
    const QubitChannel decohering = random_decohering_channel(rng);
    const QubitChannel creating = amplitude_damping(uniform(rng, 0.2, 0.8));

    c.observe(discord_b_numeric(apply_local_b(classical, unital)).discord, 1e-6);
    c.observe(discord_b_numeric(apply_local_b(classical, decohering)).discord,
              1e-6);
    best_created = std::max(
        best_created,
        discord_b_numeric(apply_local_b(classical, creating)).discord);
  }
  c.require(best_created > 1e-4);
}

void suite_steering_dim_rank(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state =
        (i % 3 == 0)   ? random_two_qubit_state(rng)
        : (i % 3 == 1) ? random_needle_state(rng)
                       : product_state(random_single_qubit_state(rng),
                                       random_single_qubit_state(rng));
    const int expected = theta_rank(state) - 1;
    c.require(steering_ellipsoid(state, Side::A).dim == expected);
    c.require(steering_ellipsoid(state, Side::B).dim == expected);
  }
}

void suite_steering_slocc_invariance(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state = random_two_qubit_state(rng);
    const Ellipsoid before = steering_ellipsoid(state, Side::A);
    const Ellipsoid after =
        steering_ellipsoid(filter_on_b(state, random_filter(rng)), Side::A);
    c.observe((before.center - after.center).norm(), 1e-8);
    c.observe((quad_form(before) - quad_form(after)).cwiseAbs().maxCoeff(), 1e-8);
  }
}

void suite_steering_marginal_member(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state =
        i % 2 == 0 ? random_two_qubit_state(rng) : random_needle_state(rng);
    const Ellipsoid ea = steering_ellipsoid(state, Side::A);
    const Ellipsoid eb = steering_ellipsoid(state, Side::B);
    c.observe(membership_defect(ea, state.theta().a(), 1e-9), 0.0);
    c.observe(membership_defect(eb, state.theta().b(), 1e-9), 0.0);
  }
}

void suite_steered_outcomes(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state = random_two_qubit_state(rng);
    const BlochVector x = random_unit_vector(rng);
    const Ellipsoid ea = steering_ellipsoid(state, Side::A);
    const SteeredOutcome out = steered_state(state, x, Side::A);
    const double expected_p = 0.5 * (1.0 + state.theta().b().dot(x));
    c.observe(std::abs(out.probability - expected_p), 1e-12);
    c.observe(out.bloch.norm() - 1.0, 1e-9);
    c.observe(membership_defect(ea, out.bloch, 1e-9), 0.0);
  }
}

void suite_ellipsoid_in_ball(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state =
        i % 2 == 0 ? random_two_qubit_state(rng)
                   : apply_local_b(random_bell_diagonal_state(rng),
                                   amplitude_damping(uniform(rng, 0.0, 1.0)));
    for (Side side : {Side::A, Side::B}) {
      const Ellipsoid e = steering_ellipsoid(state, side);
      for (int k = 0; k < 3; ++k) {
        const double reach =
            std::abs(e.center.dot(e.orientation.col(k))) + e.semiaxes(k);
        c.observe(reach - 1.0, 1e-8);
      }
      for (int s = 0; s < 8; ++s) {
        const BlochVector xi = random_unit_vector(rng);
        const BlochVector surface =
            e.center + e.orientation * (e.semiaxes.asDiagonal() * xi);
        c.observe(surface.norm() - 1.0, 1e-8);
      }
    }
  }
}

void suite_length_monotonicity(Check& c, Rng& rng, const VerifyOptions& o) {
  // Trial 0 pairs each state with the identity channel so a planted inflation
  // (the length_inflation hook) is caught even if every random channel
  // happens to contract strongly.
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState needle = random_needle_state(rng);
    const TwoQubitState bell = random_bell_diagonal_state(rng);
    const QubitChannel ch = i == 0 ? identity_channel()
                                   : random_cptp_channel(rng, i % 2 == 0 ? 4 : 2);
    for (const TwoQubitState& state : {needle, bell}) {
      const TwoQubitState mapped = apply_local_b(state, ch);
      for (Side side : {Side::A, Side::B}) {
        const double before =
            ellipsoid_size(steering_ellipsoid(state, side)).length;
        const double after =
            ellipsoid_size(steering_ellipsoid(mapped, side)).length +
            o.length_inflation;
        c.observe(after - before, 1e-9);
      }
    }
  }
}

void suite_discord_bounds(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state =
        (i % 3 == 0)   ? random_two_qubit_state(rng)
        : (i % 3 == 1) ? random_x_state(rng)
                       : random_plus_zero_state(rng);
    const DiscordResult d = discord_b_numeric(state);
    c.observe(-d.discord, 1e-9);
    const double sa = von_neumann_entropy(reduced_state(state, Side::A).density());
    const double sb = von_neumann_entropy(reduced_state(state, Side::B).density());
    c.observe(d.discord - std::min(sa, sb), 1e-6);
    c.observe(std::abs(d.minimizing_direction.norm() - 1.0), 1e-9);

    const TwoQubitState prod = product_state(random_single_qubit_state(rng),
                                             random_single_qubit_state(rng));
    c.observe(discord_b_numeric(prod).discord, 1e-6);
  }
}

void suite_discord_radial_iff(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    // Generic two-component sample: measurably discordant, hence non-radial.
    const TwoQubitState quantum = random_plus_zero_state(rng);
    const double dq = discord_b_numeric(quantum).discord;
    const bool rq = is_radial_segment(steering_ellipsoid(quantum, Side::B));
    if (dq > 1e-4) c.require(!rq);
    if (dq < 1e-6) c.require(rq);

    // Collinear sample: zero discord, hence radial.
    const TwoQubitState classical = collinear_plus_zero_state(rng);
    const double dc = discord_b_numeric(classical).discord;
    c.observe(dc, 1e-6);
    c.require(is_radial_segment(steering_ellipsoid(classical, Side::B)));
  }
}

void suite_discord_x_agreement(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state = random_x_state(rng);
    const DiscordResult analytic = discord_x_state(state);
    const DiscordResult numeric = discord_b_numeric(state);
    c.observe(std::abs(analytic.discord - numeric.discord), 1e-4);
  }
}

void suite_discord_unitary_invariance(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state =
        i % 2 == 0 ? random_two_qubit_state(rng) : random_x_state(rng);
    const TwoQubitState rotated =
        rotate_local(state, random_unitary2(rng), random_unitary2(rng));
    c.observe(std::abs(discord_b_numeric(state).discord -
                       discord_b_numeric(rotated).discord),
              1e-8);
  }
}

void suite_mutual_information_dpi(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state = random_two_qubit_state(rng);
    const QubitChannel ch = random_cptp_channel(rng, i % 2 == 0 ? 4 : 2);
    c.observe(mutual_information(apply_local_b(state, ch)) -
                  mutual_information(state),
              1e-9);
    c.observe(-mutual_information(state), 1e-12);
  }
}

void suite_concurrence_ad_monotone(Check& c, Rng& rng, const VerifyOptions& o) {
  const int sweeps = std::max(1, o.trials / 10);
  for (int i = 0; i < sweeps; ++i) {
    const auto cv = random_bell_diagonal_c(rng);
    const TwoQubitState base = bell_diagonal_state(cv[0], cv[1], cv[2]);
    double previous = concurrence(base);
    for (int k = 1; k < 100; ++k) {
      const double p = k / 99.0;
      const double value = concurrence(apply_local_b(base, amplitude_damping(p)));
      c.observe(value - previous, 1e-9);
      previous = value;
    }
  }
}

void suite_decomposition_round_trip(Check& c, Rng& rng, const VerifyOptions& o) {
  for (int i = 0; i < o.trials; ++i) {
    const TwoQubitState state = random_needle_state(rng);
    const NeedleDecomposition d = needle_decompose(state);
    c.observe(std::abs(d.p[0] + d.p[1] - 1.0), 1e-10);
    c.observe(d.residual, 1e-9);

    Matrix4c rebuilt = Matrix4c::Zero();
    for (int k = 0; k < 2; ++k)
      rebuilt += d.p[k] * kron(d.component_a[k].density(),
                               d.component_b[k].density());
    c.observe(frobenius_gap(rebuilt, state.density()), 1e-9);

    const PreparationRecipe recipe = build_preparation(d);
    Matrix2c sum = Matrix2c::Zero();
    for (const auto& e : recipe.channel.kraus()) sum += e.adjoint() * e;
    c.observe((sum - Matrix2c::Identity()).cwiseAbs().maxCoeff(), 1e-10);
    const TwoQubitState prepared =
        apply_local_b(recipe.classical_state, recipe.channel);
    c.observe(frobenius_gap(prepared.density(), state.density()), 1e-9);

    c.require(steering_ellipsoid(state, Side::A).dim == 1);
    c.require(steering_ellipsoid(state, Side::B).dim == 1);
  }
}

void suite_theorem_reports(Check& c, Rng& rng, const VerifyOptions& o) {
  const int rounds = std::max(1, o.trials / 3);
  for (int i = 0; i < rounds; ++i) {
    const TheoremReport needle = verify_theorem(random_needle_state(rng));
    c.require(needle.consistent);
    c.require(needle.applicable);

    const TheoremReport classical = verify_theorem(random_classical_on_b(rng));
    c.require(classical.consistent);
    c.require(classical.radial);
    c.observe(classical.discord, 1e-6);

    const TheoremReport full = verify_theorem(random_two_qubit_state(rng));
    c.require(full.consistent);
    c.require(!full.applicable);
    c.require(full.eb_dim == 3);
  }
}

void suite_scan_determinism(Check& c, Rng& rng, const VerifyOptions& o) {
  const int runs = std::min(o.trials, 5);
  for (int i = 0; i < runs; ++i) {
    ScanConfig cfg;
    cfg.bell_c = random_bell_diagonal_c(rng);
    cfg.steps = 3;
    cfg.p_end = 0.9;
    const std::vector<ScanRow> rows = run_p_scan(cfg);
    c.require(scan_csv(rows, cfg) == scan_csv(run_p_scan(cfg), cfg));

    const auto& cv = *cfg.bell_c;
    const TwoQubitState base = bell_diagonal_state(cv[0], cv[1], cv[2]);
    for (const ScanRow& row : rows) {
      const TwoQubitState state =
          apply_local_b(base, amplitude_damping(row.p));
      c.observe(std::abs(row.discord - discord_b(state).discord), 1e-12);
      c.observe(std::abs(row.concurrence - concurrence(state)), 1e-12);
      c.observe(std::abs(row.lb - ellipsoid_size(steering_ellipsoid(
                                      state, Side::B)).length),
                1e-12);
      c.require(std::isfinite(row.discord) && std::isfinite(row.mutual_info) &&
                std::isfinite(row.vola) && std::isfinite(row.volb));
    }
  }
}

const SuiteSpec kSuites[] = {
    {"pauli_round_trip", "coefficient/density round-trip defect, tol 1e-12",
     suite_pauli_round_trip},
    {"pauli_marginals", "reduced Bloch vs border-block gap, tol 1e-12",
     suite_pauli_marginals},
    {"state_validation", "hermiticity/trace defect, tol 1e-12",
     suite_state_validation},
    {"channel_tp_choi", "trace-preservation/Choi-PSD/affine defect, tol 1e-10",
     suite_channel_tp_choi},
    {"channel_routes", "Kraus-route vs coefficient-route gap, tol 1e-10",
     suite_channel_routes},
    {"data_processing", "trace-distance expansion, tol 1e-10",
     suite_data_processing},
    {"amplitude_damping", "closed-form/Choi defect, tol 1e-10",
     suite_amplitude_damping},
    {"classifier_taxonomy", "constructed-class mismatches",
     suite_classifier_taxonomy},
    {"classifier_discord_power",
     "discord left on classical states by non-creating classes, tol 1e-6",
     suite_classifier_discord_power},
    {"steering_dim_rank", "dim vs coefficient-rank mismatches",
     suite_steering_dim_rank},
    {"steering_slocc_invariance", "center/quadratic-form drift, tol 1e-8",
     suite_steering_slocc_invariance},
    {"steering_marginal_member", "marginal membership defect, tol 0",
     suite_steering_marginal_member},
    {"steered_outcomes", "probability/membership defect, tol 1e-12",
     suite_steered_outcomes},
    {"ellipsoid_in_ball", "unit-ball reach excess, tol 1e-8",
     suite_ellipsoid_in_ball},
    {"length_monotonicity", "length growth under local B channels, tol 1e-9",
     suite_length_monotonicity},
    {"discord_bounds", "range/direction defects, tol 1e-6",
     suite_discord_bounds},
    {"discord_radial_iff", "classical-sample discord, tol 1e-6",
     suite_discord_radial_iff},
    {"discord_x_agreement", "analytic vs numeric gap, tol 1e-4",
     suite_discord_x_agreement},
    {"discord_unitary_invariance", "discord drift under local unitaries, tol 1e-8",
     suite_discord_unitary_invariance},
    {"mutual_information_dpi", "mutual-information growth, tol 1e-9",
     suite_mutual_information_dpi},
    {"concurrence_ad_monotone", "concurrence growth along damping, tol 1e-9",
     suite_concurrence_ad_monotone},
    {"decomposition_round_trip", "reconstruction/preparation residual, tol 1e-9",
     suite_decomposition_round_trip},
    {"theorem_reports", "inconsistent reports", suite_theorem_reports},
    {"scan_determinism", "row vs direct-call gap, tol 1e-12",
     suite_scan_determinism},
};

}  // namespace

std::vector<SuiteResult> run_verify(const VerifyOptions& options) {
  if (options.trials <= 0)
    fail(ErrorCode::DomainError, "verification requires at least one trial");

  std::vector<SuiteResult> results;
  std::uint64_t stream = 0;
  for (const SuiteSpec& spec : kSuites) {
    Rng rng(split_seed(options.seed, stream++));
    Check check;
    SuiteResult r;
    r.name = spec.name;
    r.note = spec.note;
    r.trials = options.trials;
    try {
      spec.fn(check, rng, options);
      r.failures = check.failures;
      r.worst = check.worst;
      r.passed = check.failures == 0;
    } catch (const Error& e) {
      r.failures = r.failures ? r.failures : 1;
      r.passed = false;
      r.note = std::string("aborted: ") + e.what();
    }
    results.push_back(std::move(r));
  }
  return results;
}

bool all_passed(const std::vector<SuiteResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const SuiteResult& r) { return r.passed; });
}

std::string format_report(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  for (const SuiteResult& r : results) {
    char worst[32];
    std::snprintf(worst, sizeof worst, "%.3g", r.worst);
    out << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (trials " << r.trials
        << ", failures " << r.failures << ", worst " << worst << ") - " << r.note
        << "\n";
  }
  out << (all_passed(results) ? "all suites passed" : "SUITE FAILURES PRESENT")
      << "\n";
  return out.str();
}

}  // namespace qse
