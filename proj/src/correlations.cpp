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

#include "qse/correlations.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <random>
#include <vector>

namespace qse {

namespace {

constexpr double kPi = 3.14159265358979323846;

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

template <typename M>
double entropy_impl(const M& rho) {
  Eigen::SelfAdjointEigenSolver<M> es(0.5 * (rho + rho.adjoint()),
                                      Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (int i = 0; i < es.eigenvalues().size(); ++i)
    s -= xlog2x(std::max(0.0, es.eigenvalues()(i)));
  return s;
}

// Measurement direction from spherical angles.
BlochVector direction(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi),
          std::cos(theta)};
}

struct MeasurementContext {
  BlochVector a;
  BlochVector b;
  Matrix3d t;
};

// Average post-measurement entropy of A for a projective measurement along n on B.
double conditional_entropy(const MeasurementContext& ctx, const BlochVector& n) {
  double e = 0.0;
  for (double sign : {1.0, -1.0}) {
    const double prob = 0.5 * (1.0 + sign * ctx.b.dot(n));
    if (prob < 1e-15) continue;
    const BlochVector w = ctx.a + sign * ctx.t * n;
    e += prob * qubit_entropy(w.norm() / (2.0 * prob));
  }
  return e;
}

// Nelder-Mead on (theta, phi); the objective is smooth and periodic, so the
// walk is unconstrained.
double nelder_mead(const std::function<double(double, double)>& f, double& th,
                   double& ph, double tol, int max_iter) {
  struct Vertex {
    double x, y, v;
  };
  std::array<Vertex, 3> s{Vertex{th, ph, f(th, ph)},
                          Vertex{th + 0.02, ph, f(th + 0.02, ph)},
                          Vertex{th, ph + 0.02, f(th, ph + 0.02)}};
  auto by_value = [](const Vertex& l, const Vertex& r) { return l.v < r.v; };
  for (int it = 0; it < max_iter; ++it) {
    std::sort(s.begin(), s.end(), by_value);
    if (s[2].v - s[0].v < tol) break;
    const double cx = 0.5 * (s[0].x + s[1].x), cy = 0.5 * (s[0].y + s[1].y);
    auto eval = [&](double alpha) {
      Vertex v{cx + alpha * (s[2].x - cx), cy + alpha * (s[2].y - cy), 0.0};
      v.v = f(v.x, v.y);
      return v;
    };
    Vertex refl = eval(-1.0);
    if (refl.v < s[0].v) {
      Vertex exp = eval(-2.0);
      s[2] = exp.v < refl.v ? exp : refl;
    } else if (refl.v < s[1].v) {
      s[2] = refl;
    } else {
      Vertex contr = eval(refl.v < s[2].v ? -0.5 : 0.5);
      if (contr.v < std::min(refl.v, s[2].v)) {
        s[2] = contr;
      } else {  // shrink
        for (int i = 1; i < 3; ++i) {
          s[i].x = s[0].x + 0.5 * (s[i].x - s[0].x);
          s[i].y = s[0].y + 0.5 * (s[i].y - s[0].y);
          s[i].v = f(s[i].x, s[i].y);
        }
      }
    }
  }
  std::sort(s.begin(), s.end(), by_value);
  th = s[0].x;
  ph = s[0].y;
  return s[0].v;
}

double golden_minimize(const std::function<double(double)>& f, double lo,
                       double hi, int iterations) {
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double c = hi - gr * (hi - lo), d = lo + gr * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iterations; ++i) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double qubit_entropy(double bloch_norm) {
  const double r = std::clamp(bloch_norm, 0.0, 1.0);
  return -xlog2x(0.5 * (1.0 + r)) - xlog2x(0.5 * (1.0 - r));
}

double von_neumann_entropy(const Matrix2c& rho) { return entropy_impl(rho); }
double von_neumann_entropy(const Matrix4c& rho) { return entropy_impl(rho); }

double mutual_information(const TwoQubitState& state) {
  const double sa = qubit_entropy(state.theta().a().norm());
  const double sb = qubit_entropy(state.theta().b().norm());
  return sa + sb - von_neumann_entropy(state.density());
}

double trace_distance(const Matrix2c& rho, const Matrix2c& sigma) {
  Matrix2c d = rho - sigma;
  d = 0.5 * (d + d.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix2c> es(d, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double trace_distance(const Matrix4c& rho, const Matrix4c& sigma) {
  Matrix4c d = rho - sigma;
  d = 0.5 * (d + d.adjoint()).eval();
  Eigen::SelfAdjointEigenSolver<Matrix4c> es(d, Eigen::EigenvaluesOnly);
  return 0.5 * es.eigenvalues().cwiseAbs().sum();
}

double concurrence(const TwoQubitState& state) {
  const Matrix4c& rho = state.density();
  const Matrix4c yy = kron(pauli(2), pauli(2));
  const Matrix4c r = rho * yy * rho.conjugate() * yy;
  Eigen::ComplexEigenSolver<Matrix4c> es(r, false);
  Eigen::Vector4d lam = es.eigenvalues().real().cwiseMax(0.0).cwiseSqrt();
  std::sort(lam.data(), lam.data() + 4, std::greater<double>());
  return std::max(0.0, lam(0) - lam(1) - lam(2) - lam(3));
}

bool is_x_state(const TwoQubitState& state, double tol) {
  const Matrix4c& rho = state.density();
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      if (i == j || i + j == 3) continue;
      if (std::abs(rho(i, j)) > tol) return false;
    }
  return true;
}

DiscordResult discord_b_numeric(const TwoQubitState& state,
                                const DiscordOptions& options) {
  const PauliTheta& th = state.theta();
  const MeasurementContext ctx{th.a(), th.b(), th.correlation()};
  auto objective = [&ctx](double t, double p) {
    return conditional_entropy(ctx, direction(t, p));
  };

  // Hemisphere grid (directions n and -n give the same measurement).  Keep the
  // best few well-separated cells so near-degenerate basins all get refined.
  struct Cell {
    double t, p, v;
  };
  std::vector<Cell> top;
  auto offer = [&top](const Cell& c) {
    constexpr size_t kKeep = 4;
    constexpr double kSeparation = 0.3;  // radians, on the sphere
    const BlochVector n = direction(c.t, c.p);
    for (auto& existing : top) {
      const BlochVector m = direction(existing.t, existing.p);
      // n and -n label the same measurement.
      const double dist = std::min((n - m).norm(), (n + m).norm());
      if (dist < kSeparation) {
        if (c.v < existing.v) existing = c;
        return;
      }
    }
    if (top.size() < kKeep) {
      top.push_back(c);
      return;
    }
    auto worst = std::max_element(
        top.begin(), top.end(),
        [](const Cell& l, const Cell& r) { return l.v < r.v; });
    if (c.v < worst->v) *worst = c;
  };
  offer({0.0, 0.0, objective(0.0, 0.0)});
  for (int i = 0; i < options.grid_theta; ++i) {
    const double t = (i + 1.0) / options.grid_theta * 0.5 * kPi;
    for (int j = 0; j < options.grid_phi; ++j) {
      const double p = j * 2.0 * kPi / options.grid_phi;
      offer({t, p, objective(t, p)});
    }
  }

  // Simplex refinement of each retained cell, converging well past the
  // requested tolerance so minima can be compared at refine_tol scale, then
  // seeded random restarts around the best point found.
  const double tol = options.refine_tol * 1e-4;
  double best_t = 0.0, best_p = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (const Cell& cell : top) {
    double t = cell.t, p = cell.p;
    const double v = nelder_mead(objective, t, p, tol, 400);
    if (v < best) {
      best = v;
      best_t = t;
      best_p = p;
    }
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_real_distribution<double> jitter(-0.25, 0.25);
  for (int r = 0; r < options.restarts; ++r) {
    double t = best_t + jitter(rng), p = best_p + jitter(rng);
    const double v = nelder_mead(objective, t, p, tol, 400);
    if (v < best) {
      best = v;
      best_t = t;
      best_p = p;
    }
  }

  DiscordResult res;
  res.conditional_entropy = best;
  res.minimizing_direction = direction(best_t, best_p);
  res.discord = qubit_entropy(th.b().norm()) -
                von_neumann_entropy(state.density()) + best;
  res.method = DiscordMethod::NumericProjective;
  return res;
}

DiscordResult discord_x_state(const TwoQubitState& state) {
  if (!is_x_state(state))
    fail(ErrorCode::NotXState, "density matrix is not X-shaped");
  const PauliTheta& th = state.theta();
  const MeasurementContext ctx{th.a(), th.b(), th.correlation()};

  // For X states the optimum lies in the plane spanned by e3 and the dominant
  // right-singular direction of the in-plane correlation block.
  const Eigen::Matrix2d txy = th.correlation().topLeftCorner<2, 2>();
  Eigen::JacobiSVD<Eigen::Matrix2d> svd(txy, Eigen::ComputeFullV);
  const Eigen::Vector2d v = svd.matrixV().col(0);

  auto dir_at = [&v](double angle) {
    return BlochVector(std::sin(angle) * v(0), std::sin(angle) * v(1),
                       std::cos(angle));
  };
  auto objective = [&](double angle) {
    return conditional_entropy(ctx, dir_at(angle));
  };

  // Dense scan over the quarter arc (the sz and in-plane candidates are its
  // endpoints), then golden refinement around the best sample.
  const int n = 128;
  double best_angle = 0.0, best = objective(0.0);
  for (int i = 1; i <= n; ++i) {
    const double angle = 0.5 * kPi * i / n;
    const double val = objective(angle);
    if (val < best) {
      best = val;
      best_angle = angle;
    }
  }
  const double step = 0.5 * kPi / n;
  const double lo = std::max(0.0, best_angle - step);
  const double hi = std::min(0.5 * kPi, best_angle + step);
  const double refined_angle = golden_minimize(objective, lo, hi, 80);
  if (objective(refined_angle) < best) {
    best = objective(refined_angle);
    best_angle = refined_angle;
  }

  DiscordResult res;
  res.conditional_entropy = best;
  res.minimizing_direction = dir_at(best_angle);
  res.discord = qubit_entropy(th.b().norm()) -
                von_neumann_entropy(state.density()) + best;
  res.method = DiscordMethod::AnalyticXState;
  return res;
}

DiscordResult discord_b(const TwoQubitState& state) {
  return is_x_state(state) ? discord_x_state(state) : discord_b_numeric(state);
}

}  // namespace qse
