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

#include "qse/qse.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>
#include <utility>

#include "qse/channels.hpp"
#include "qse/correlations.hpp"
#include "qse/decomposition.hpp"
#include "qse/error.hpp"
#include "qse/io.hpp"
#include "qse/pauli.hpp"
#include "qse/scan.hpp"
#include "qse/steering.hpp"
#include "qse/verify.hpp"

// Opaque handle bodies (C-visible names, C++ payloads).
struct qse_state {
  qse::TwoQubitState value;
};
struct qse_channel {
  qse::QubitChannel value;
};

namespace {

thread_local std::string g_last_error;

qse_status status_from(qse::ErrorCode code) {
  using qse::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidState:
      return QSE_ERR_INVALID_STATE;
    case ErrorCode::NotAState:
      return QSE_ERR_NOT_A_STATE;
    case ErrorCode::NotTracePreserving:
      return QSE_ERR_NOT_TRACE_PRESERVING;
    case ErrorCode::NotCompletelyPositive:
      return QSE_ERR_NOT_COMPLETELY_POSITIVE;
    case ErrorCode::DomainError:
      return QSE_ERR_DOMAIN;
    case ErrorCode::ZeroProbabilityOutcome:
      return QSE_ERR_ZERO_PROBABILITY;
    case ErrorCode::ProductStateDegenerate:
      return QSE_ERR_PRODUCT_DEGENERATE;
    case ErrorCode::NotANeedle:
      return QSE_ERR_NOT_A_NEEDLE;
    case ErrorCode::NotANeedleState:
      return QSE_ERR_NOT_A_NEEDLE_STATE;
    case ErrorCode::DecompositionInfeasible:
      return QSE_ERR_DECOMPOSITION_INFEASIBLE;
    case ErrorCode::NotXState:
      return QSE_ERR_NOT_X_STATE;
    case ErrorCode::ParseError:
      return QSE_ERR_PARSE;
    case ErrorCode::IoError:
      return QSE_ERR_IO;
  }
  return QSE_ERR_UNKNOWN;
}

// Runs `fn`, translating exceptions into status codes + thread-local detail.
template <typename Fn>
qse_status guarded(Fn&& fn) {
  try {
    fn();
    return QSE_OK;
  } catch (const qse::Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return QSE_ERR_UNKNOWN;
  } catch (...) {
    g_last_error = "unknown failure";
    return QSE_ERR_UNKNOWN;
  }
}

qse_status null_argument(const char* what) {
  g_last_error = std::string(what) + " must not be null";
  return QSE_ERR_NULL_ARGUMENT;
}

qse::Matrix4c density_from_parts(const double re[16], const double im[16]) {
  qse::Matrix4c rho;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      rho(i, j) = qse::complexd(re[4 * i + j], im ? im[4 * i + j] : 0.0);
  return rho;
}

qse_status side_from(int side, qse::Side* out) {
  if (side != 0 && side != 1) {
    g_last_error = "side must be 0 (A) or 1 (B)";
    return QSE_ERR_DOMAIN;
  }
  *out = side == 0 ? qse::Side::A : qse::Side::B;
  return QSE_OK;
}

void fill_ellipsoid(const qse::Ellipsoid& e, qse_ellipsoid* out) {
  for (int i = 0; i < 3; ++i) {
    out->center[i] = e.center(i);
    out->semiaxes[i] = e.semiaxes(i);
    for (int k = 0; k < 3; ++k) out->axes[3 * k + i] = e.orientation(i, k);
  }
  out->dim = e.dim;
}

qse::Ellipsoid ellipsoid_from(const qse_ellipsoid* e) {
  qse::Ellipsoid out;
  for (int i = 0; i < 3; ++i) {
    out.center(i) = e->center[i];
    out.semiaxes(i) = e->semiaxes[i];
    for (int k = 0; k < 3; ++k) out.orientation(i, k) = e->axes[3 * k + i];
  }
  out.dim = e->dim;
  return out;
}

void fill_discord(const qse::DiscordResult& d, qse_discord* out) {
  out->discord = d.discord;
  for (int i = 0; i < 3; ++i) out->direction[i] = d.minimizing_direction(i);
  out->conditional_entropy = d.conditional_entropy;
  out->analytic = d.method == qse::DiscordMethod::AnalyticXState ? 1 : 0;
}

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

// Transfers a freshly built payload to the caller's handle pointer.
template <typename Handle, typename Value>
void emit(Handle** out, Value&& value) {
  *out = new Handle{std::forward<Value>(value)};
}

}  // namespace

extern "C" {

const char* qse_version(void) { return "1.0.0"; }

const char* qse_status_name(qse_status s) {
  switch (s) {
    case QSE_OK:
      return "ok";
    case QSE_ERR_INVALID_STATE:
      return "invalid state";
    case QSE_ERR_NOT_A_STATE:
      return "not a state";
    case QSE_ERR_NOT_TRACE_PRESERVING:
      return "not trace preserving";
    case QSE_ERR_NOT_COMPLETELY_POSITIVE:
      return "not completely positive";
    case QSE_ERR_DOMAIN:
      return "domain error";
    case QSE_ERR_ZERO_PROBABILITY:
      return "zero probability outcome";
    case QSE_ERR_PRODUCT_DEGENERATE:
      return "product state degenerate";
    case QSE_ERR_NOT_A_NEEDLE:
      return "not a needle";
    case QSE_ERR_NOT_A_NEEDLE_STATE:
      return "not a needle state";
    case QSE_ERR_DECOMPOSITION_INFEASIBLE:
      return "decomposition infeasible";
    case QSE_ERR_NOT_X_STATE:
      return "not an X state";
    case QSE_ERR_PARSE:
      return "parse error";
    case QSE_ERR_IO:
      return "io error";
    case QSE_ERR_NULL_ARGUMENT:
      return "null argument";
    case QSE_ERR_UNKNOWN:
      return "unknown error";
  }
  return "unknown error";
}

const char* qse_last_error(void) { return g_last_error.c_str(); }

void qse_string_free(char* s) { std::free(s); }
void qse_state_free(qse_state* s) { delete s; }
void qse_channel_free(qse_channel* c) { delete c; }

/* --- states -------------------------------------------------------------- */

qse_status qse_state_from_density(const double re[16], const double im[16],
                                  qse_state** out) {
  if (!re || !out) return null_argument("re/out");
  return guarded([&] { emit(out, qse::TwoQubitState(density_from_parts(re, im))); });
}

qse_status qse_state_from_theta(const double theta[16], qse_state** out) {
  if (!theta || !out) return null_argument("theta/out");
  return guarded([&] {
    qse::Matrix4d m;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = theta[4 * i + j];
    emit(out, qse::density_from_theta(qse::PauliTheta(m)));
  });
}

qse_status qse_state_bell_diagonal(double c1, double c2, double c3,
                                   qse_state** out) {
  if (!out) return null_argument("out");
  return guarded([&] { emit(out, qse::bell_diagonal_state(c1, c2, c3)); });
}

qse_status qse_state_from_json(const char* json_text, qse_state** out) {
  if (!json_text || !out) return null_argument("json_text/out");
  return guarded([&] {
    const auto j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded())
      qse::fail(qse::ErrorCode::ParseError, "state document is not valid JSON");
    emit(out, qse::state_from_json(j));
  });
}

qse_status qse_state_load(const char* path, qse_state** out) {
  if (!path || !out) return null_argument("path/out");
  return guarded([&] { emit(out, qse::load_state(path)); });
}

qse_status qse_state_density(const qse_state* s, double re[16], double im[16]) {
  if (!s || !re || !im) return null_argument("state/re/im");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      re[4 * i + j] = s->value.density()(i, j).real();
      im[4 * i + j] = s->value.density()(i, j).imag();
    }
  return QSE_OK;
}

qse_status qse_state_theta(const qse_state* s, double theta[16]) {
  if (!s || !theta) return null_argument("state/theta");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) theta[4 * i + j] = s->value.theta().theta(i, j);
  return QSE_OK;
}

qse_status qse_state_reduced_bloch(const qse_state* s, int side, double bloch[3]) {
  if (!s || !bloch) return null_argument("state/bloch");
  qse::Side parsed;
  if (const qse_status st = side_from(side, &parsed); st != QSE_OK) return st;
  return guarded([&] {
    const qse::BlochVector r = qse::reduced_state(s->value, parsed).bloch();
    for (int i = 0; i < 3; ++i) bloch[i] = r(i);
  });
}

qse_status qse_validate_density(const double re[16], const double im[16],
                                qse_validation* out) {
  if (!re || !out) return null_argument("re/out");
  return guarded([&] {
    const qse::ValidationReport r = qse::validate_state(density_from_parts(re, im));
    out->hermiticity_defect = r.hermiticity_defect;
    out->trace_defect = r.trace_defect;
    out->min_eigenvalue = r.min_eigenvalue;
    out->passed = r.passed ? 1 : 0;
  });
}

/* --- channels ------------------------------------------------------------ */

qse_status qse_channel_identity(qse_channel** out) {
  if (!out) return null_argument("out");
  return guarded([&] { emit(out, qse::identity_channel()); });
}

qse_status qse_channel_amplitude_damping(double p, qse_channel** out) {
  if (!out) return null_argument("out");
  return guarded([&] { emit(out, qse::amplitude_damping(p)); });
}

qse_status qse_channel_from_kraus(const double* re, const double* im,
                                  size_t count, qse_channel** out) {
  if (!re || !out) return null_argument("re/out");
  if (count == 0) {
    g_last_error = "a channel needs at least one operator";
    return QSE_ERR_DOMAIN;
  }
  return guarded([&] {
    std::vector<qse::Matrix2c> ops(count);
    for (size_t k = 0; k < count; ++k)
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          ops[k](i, j) = qse::complexd(re[4 * k + 2 * i + j],
                                       im ? im[4 * k + 2 * i + j] : 0.0);
    emit(out, qse::channel_from_kraus(ops));
  });
}

qse_status qse_channel_from_affine(const double m[9], const double t[3],
                                   qse_channel** out) {
  if (!m || !t || !out) return null_argument("m/t/out");
  return guarded([&] {
    qse::Matrix3d mm;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) mm(i, j) = m[3 * i + j];
    emit(out, qse::affine_channel(mm, qse::Vector3d(t[0], t[1], t[2])));
  });
}

qse_status qse_channel_from_json(const char* json_text, qse_channel** out) {
  if (!json_text || !out) return null_argument("json_text/out");
  return guarded([&] {
    const auto j = nlohmann::json::parse(json_text, nullptr, false);
    if (j.is_discarded())
      qse::fail(qse::ErrorCode::ParseError, "channel document is not valid JSON");
    emit(out, qse::channel_from_json(j));
  });
}

qse_status qse_channel_load(const char* path, qse_channel** out) {
  if (!path || !out) return null_argument("path/out");
  return guarded([&] { emit(out, qse::load_channel(path)); });
}

qse_status qse_channel_affine(const qse_channel* c, double m[9], double t[3]) {
  if (!c || !m || !t) return null_argument("channel/m/t");
  for (int i = 0; i < 3; ++i) {
    t[i] = c->value.translation()(i);
    for (int j = 0; j < 3; ++j) m[3 * i + j] = c->value.linear_part()(i, j);
  }
  return QSE_OK;
}

qse_status qse_channel_kraus_count(const qse_channel* c, size_t* count) {
  if (!c || !count) return null_argument("channel/count");
  *count = c->value.kraus().size();
  return QSE_OK;
}

qse_status qse_channel_kraus(const qse_channel* c, size_t index, double re[4],
                             double im[4]) {
  if (!c || !re || !im) return null_argument("channel/re/im");
  if (index >= c->value.kraus().size()) {
    g_last_error = "operator index out of range";
    return QSE_ERR_DOMAIN;
  }
  const qse::Matrix2c& e = c->value.kraus()[index];
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      re[2 * i + j] = e(i, j).real();
      im[2 * i + j] = e(i, j).imag();
    }
  return QSE_OK;
}

qse_status qse_channel_compose(const qse_channel* first, const qse_channel* then,
                               qse_channel** out) {
  if (!first || !then || !out) return null_argument("first/then/out");
  return guarded([&] { emit(out, qse::compose(first->value, then->value)); });
}

qse_status qse_channel_classify(const qse_channel* c, qse_channel_class* out) {
  if (!c || !out) return null_argument("channel/out");
  return guarded([&] {
    switch (qse::classify(c->value)) {
      case qse::ChannelClass::Unital:
        *out = QSE_CHANNEL_UNITAL;
        break;
      case qse::ChannelClass::CompletelyDecohering:
        *out = QSE_CHANNEL_COMPLETELY_DECOHERING;
        break;
      case qse::ChannelClass::DiscordCreating:
        *out = QSE_CHANNEL_DISCORD_CREATING;
        break;
    }
  });
}

const char* qse_channel_class_name(qse_channel_class c) {
  switch (c) {
    case QSE_CHANNEL_UNITAL:
      return qse::channel_class_name(qse::ChannelClass::Unital);
    case QSE_CHANNEL_COMPLETELY_DECOHERING:
      return qse::channel_class_name(qse::ChannelClass::CompletelyDecohering);
    case QSE_CHANNEL_DISCORD_CREATING:
      return qse::channel_class_name(qse::ChannelClass::DiscordCreating);
  }
  return "unknown";
}

qse_status qse_apply_local_b(const qse_state* s, const qse_channel* c,
                             qse_state** out) {
  if (!s || !c || !out) return null_argument("state/channel/out");
  return guarded([&] { emit(out, qse::apply_local_b(s->value, c->value)); });
}

/* --- steering geometry ----------------------------------------------------- */

qse_status qse_steered_state(const qse_state* s, const double x[3],
                             int steered_side, qse_steered* out) {
  if (!s || !x || !out) return null_argument("state/x/out");
  qse::Side parsed;
  if (const qse_status st = side_from(steered_side, &parsed); st != QSE_OK)
    return st;
  return guarded([&] {
    const qse::SteeredOutcome o =
        qse::steered_state(s->value, qse::BlochVector(x[0], x[1], x[2]), parsed);
    out->probability = o.probability;
    for (int i = 0; i < 3; ++i) out->bloch[i] = o.bloch(i);
  });
}

qse_status qse_slocc_normalize(const qse_state* s, int side, qse_state** out) {
  if (!s || !out) return null_argument("state/out");
  qse::Side parsed;
  if (const qse_status st = side_from(side, &parsed); st != QSE_OK) return st;
  return guarded([&] { emit(out, qse::slocc_normalize(s->value, parsed)); });
}

qse_status qse_steering_ellipsoid(const qse_state* s, int side,
                                  qse_ellipsoid* out) {
  if (!s || !out) return null_argument("state/out");
  qse::Side parsed;
  if (const qse_status st = side_from(side, &parsed); st != QSE_OK) return st;
  return guarded(
      [&] { fill_ellipsoid(qse::steering_ellipsoid(s->value, parsed), out); });
}

qse_status qse_is_radial_segment(const qse_ellipsoid* e, double tol, int* out) {
  if (!e || !out) return null_argument("ellipsoid/out");
  return guarded(
      [&] { *out = qse::is_radial_segment(ellipsoid_from(e), tol) ? 1 : 0; });
}

qse_status qse_needle_length(const qse_ellipsoid* e, double* out) {
  if (!e || !out) return null_argument("ellipsoid/out");
  return guarded([&] { *out = qse::needle_length(ellipsoid_from(e)); });
}

qse_status qse_contains_origin(const qse_ellipsoid* e, double tol, int* out) {
  if (!e || !out) return null_argument("ellipsoid/out");
  return guarded(
      [&] { *out = qse::contains_origin(ellipsoid_from(e), tol) ? 1 : 0; });
}

qse_status qse_ellipsoid_size(const qse_ellipsoid* e, qse_size* out) {
  if (!e || !out) return null_argument("ellipsoid/out");
  return guarded([&] {
    const qse::EllipsoidSize s = qse::ellipsoid_size(ellipsoid_from(e));
    out->length = s.length;
    out->area = s.area;
    out->volume = s.volume;
  });
}

qse_status qse_ellipsoid_to_json(const qse_ellipsoid* e, char** json_out) {
  if (!e || !json_out) return null_argument("ellipsoid/json_out");
  return guarded([&] {
    *json_out = copy_string(qse::ellipsoid_to_json(ellipsoid_from(e)).dump());
  });
}

/* --- correlation measures -------------------------------------------------- */

qse_status qse_entropy(const qse_state* s, double* bits) {
  if (!s || !bits) return null_argument("state/bits");
  return guarded([&] { *bits = qse::von_neumann_entropy(s->value.density()); });
}

qse_status qse_mutual_information(const qse_state* s, double* bits) {
  if (!s || !bits) return null_argument("state/bits");
  return guarded([&] { *bits = qse::mutual_information(s->value); });
}

qse_status qse_trace_distance(const qse_state* a, const qse_state* b,
                              double* out) {
  if (!a || !b || !out) return null_argument("a/b/out");
  return guarded(
      [&] { *out = qse::trace_distance(a->value.density(), b->value.density()); });
}

qse_status qse_concurrence(const qse_state* s, double* out) {
  if (!s || !out) return null_argument("state/out");
  return guarded([&] { *out = qse::concurrence(s->value); });
}

qse_status qse_is_x_state(const qse_state* s, double tol, int* out) {
  if (!s || !out) return null_argument("state/out");
  return guarded([&] { *out = qse::is_x_state(s->value, tol) ? 1 : 0; });
}

qse_status qse_discord_b(const qse_state* s, qse_discord* out) {
  if (!s || !out) return null_argument("state/out");
  return guarded([&] { fill_discord(qse::discord_b(s->value), out); });
}

qse_status qse_discord_b_numeric(const qse_state* s, qse_discord* out) {
  if (!s || !out) return null_argument("state/out");
  return guarded([&] { fill_discord(qse::discord_b_numeric(s->value), out); });
}

/* --- needle decomposition --------------------------------------------------- */

qse_status qse_needle_decompose(const qse_state* s, qse_needle_parts* out) {
  if (!s || !out) return null_argument("state/out");
  return guarded([&] {
    const qse::NeedleDecomposition d = qse::needle_decompose(s->value);
    out->p[0] = d.p[0];
    out->p[1] = d.p[1];
    for (int k = 0; k < 2; ++k) {
      const qse::BlochVector a = d.component_a[k].bloch();
      const qse::BlochVector b = d.component_b[k].bloch();
      for (int i = 0; i < 3; ++i) {
        out->a_bloch[k][i] = a(i);
        out->b_bloch[k][i] = b(i);
      }
    }
    out->residual = d.residual;
  });
}

qse_status qse_build_preparation(const qse_state* s, qse_state** classical_out,
                                 qse_channel** channel_out) {
  if (!s || !classical_out || !channel_out)
    return null_argument("state/classical_out/channel_out");
  return guarded([&] {
    const qse::PreparationRecipe r =
        qse::build_preparation(qse::needle_decompose(s->value));
    emit(classical_out, r.classical_state);
    emit(channel_out, r.channel);
  });
}

qse_status qse_theorem_report(const qse_state* s, qse_theorem* out) {
  if (!s || !out) return null_argument("state/out");
  return guarded([&] {
    const qse::TheoremReport r = qse::verify_theorem(s->value);
    out->eb_dim = r.eb_dim;
    out->radial = r.radial ? 1 : 0;
    out->discord = r.discord;
    out->applicable = r.applicable ? 1 : 0;
    out->decomposed = r.decomposed ? 1 : 0;
    out->decomposition_residual = r.decomposition_residual;
    out->preparation_residual = r.preparation_residual;
    out->consistent = r.consistent ? 1 : 0;
  });
}

qse_status qse_theorem_report_json(const qse_state* s, char** json_out) {
  if (!s || !json_out) return null_argument("state/json_out");
  return guarded([&] {
    *json_out =
        copy_string(qse::theorem_report_to_json(qse::verify_theorem(s->value))
                        .dump());
  });
}

/* --- sweep drivers ----------------------------------------------------------- */

qse_status qse_run_p_scan(const char* config_json, char** csv_out) {
  if (!config_json || !csv_out) return null_argument("config_json/csv_out");
  return guarded([&] {
    const auto j = nlohmann::json::parse(config_json, nullptr, false);
    if (j.is_discarded())
      qse::fail(qse::ErrorCode::ParseError, "scan config is not valid JSON");
    const qse::ScanConfig config = qse::scan_config_from_json(j);
    *csv_out = copy_string(qse::scan_csv(qse::run_p_scan(config), config));
  });
}

qse_status qse_run_c3_scan(const char* config_json, char** csv_out) {
  if (!config_json || !csv_out) return null_argument("config_json/csv_out");
  return guarded([&] {
    const auto j = nlohmann::json::parse(config_json, nullptr, false);
    if (j.is_discarded())
      qse::fail(qse::ErrorCode::ParseError, "scan config is not valid JSON");
    const qse::C3ScanConfig config = qse::c3_config_from_json(j);
    *csv_out = copy_string(qse::c3_csv(qse::run_c3_scan(config), config));
  });
}

qse_status qse_needle_demo(double delta, char** json_out) {
  if (!json_out) return null_argument("json_out");
  return guarded([&] {
    *json_out = copy_string(qse::needle_demo_to_json(qse::needle_demo(delta)).dump(2));
  });
}

qse_status qse_run_verify(int trials, unsigned long long seed,
                          char** report_out, int* all_passed) {
  if (!report_out || !all_passed) return null_argument("report_out/all_passed");
  return guarded([&] {
    qse::VerifyOptions options;
    options.trials = trials;
    options.seed = seed;
    const auto results = qse::run_verify(options);
    *report_out = copy_string(qse::format_report(results));
    *all_passed = qse::all_passed(results) ? 1 : 0;
  });
}

} /* extern "C" */
