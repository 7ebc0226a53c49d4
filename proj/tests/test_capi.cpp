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

// The C surface is exercised exactly as an external consumer would use it:
// through qse.h and the shared library alone, with raw double buffers.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <string>

#include <qse/qse.h>

namespace {

struct StateDeleter {
  void operator()(qse_state* s) const { qse_state_free(s); }
};
struct ChannelDeleter {
  void operator()(qse_channel* c) const { qse_channel_free(c); }
};
struct StringDeleter {
  void operator()(char* s) const { qse_string_free(s); }
};
using StatePtr = std::unique_ptr<qse_state, StateDeleter>;
using ChannelPtr = std::unique_ptr<qse_channel, ChannelDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

StatePtr bell(double c1, double c2, double c3) {
  qse_state* raw = nullptr;
  REQUIRE(qse_state_bell_diagonal(c1, c2, c3, &raw) == QSE_OK);
  return StatePtr(raw);
}

ChannelPtr damping(double p) {
  qse_channel* raw = nullptr;
  REQUIRE(qse_channel_amplitude_damping(p, &raw) == QSE_OK);
  return ChannelPtr(raw);
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(qse_version()) == "1.0.0");
  // Status names are human-readable, suitable for "detail (name)" error lines.
  CHECK(std::string(qse_status_name(QSE_OK)) == "ok");
  CHECK(std::string(qse_status_name(QSE_ERR_NOT_A_STATE)) == "not a state");
  CHECK(std::string(qse_status_name(QSE_ERR_DOMAIN)) == "domain error");
}

TEST_CASE("state lifecycle: build, inspect, round-trip") {
  const StatePtr s = bell(0.9, -0.1, 0.09);

  double theta[16];
  REQUIRE(qse_state_theta(s.get(), theta) == QSE_OK);
  CHECK(theta[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(theta[5] == doctest::Approx(0.9).epsilon(1e-13));    // (1,1)
  CHECK(theta[10] == doctest::Approx(-0.1).epsilon(1e-13));  // (2,2)
  CHECK(theta[15] == doctest::Approx(0.09).epsilon(1e-13));  // (3,3)

  double re[16], im[16];
  REQUIRE(qse_state_density(s.get(), re, im) == QSE_OK);
  CHECK(re[0] == doctest::Approx(0.25 * (1.0 + 0.09)).epsilon(1e-13));
  CHECK(re[3] == doctest::Approx(0.25).epsilon(1e-13));  // (c1 - c2)/4
  CHECK(im[3] == doctest::Approx(0.0).epsilon(1e-14));

  // The same state rebuilt from raw buffers matches.
  qse_state* rebuilt_raw = nullptr;
  REQUIRE(qse_state_from_density(re, im, &rebuilt_raw) == QSE_OK);
  const StatePtr rebuilt(rebuilt_raw);
  double theta2[16];
  REQUIRE(qse_state_theta(rebuilt.get(), theta2) == QSE_OK);
  for (int i = 0; i < 16; ++i) CHECK(std::abs(theta2[i] - theta[i]) <= 1e-12);

  qse_state* from_theta_raw = nullptr;
  REQUIRE(qse_state_from_theta(theta, &from_theta_raw) == QSE_OK);
  const StatePtr from_theta(from_theta_raw);

  double bloch[3];
  REQUIRE(qse_state_reduced_bloch(s.get(), 0, bloch) == QSE_OK);
  CHECK(std::abs(bloch[0]) + std::abs(bloch[1]) + std::abs(bloch[2]) <= 1e-12);
  CHECK(qse_state_reduced_bloch(s.get(), 5, bloch) == QSE_ERR_DOMAIN);
}

TEST_CASE("null arguments and invalid states map to error codes") {
  CHECK(qse_state_bell_diagonal(0.5, 0.0, 0.0, nullptr) ==
        QSE_ERR_NULL_ARGUMENT);
  qse_state* out = nullptr;
  CHECK(qse_state_bell_diagonal(1.0, 1.0, 1.0, &out) == QSE_ERR_NOT_A_STATE);
  CHECK(out == nullptr);
  CHECK(std::string(qse_last_error()).size() > 0);

  CHECK(qse_state_from_density(nullptr, nullptr, &out) ==
        QSE_ERR_NULL_ARGUMENT);
  CHECK(qse_state_from_json("{\"format\": \"bell_diag\"", &out) ==
        QSE_ERR_PARSE);
  CHECK(qse_state_from_json("{\"format\": \"nope\"}", &out) == QSE_ERR_PARSE);
  CHECK(qse_state_load("missing_file_for_sure.json", &out) == QSE_ERR_IO);

  double re[16] = {0};
  double im[16] = {0};
  re[0] = 1.5;
  re[5] = -0.5;
  qse_validation report;
  REQUIRE(qse_validate_density(re, im, &report) == QSE_OK);
  CHECK(report.passed == 0);
  CHECK(report.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
}

TEST_CASE("channels through the C surface") {
  const ChannelPtr ad = damping(0.36);
  double m[9], t[3];
  REQUIRE(qse_channel_affine(ad.get(), m, t) == QSE_OK);
  CHECK(m[0] == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(m[4] == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(m[8] == doctest::Approx(0.64).epsilon(1e-14));
  CHECK(t[2] == doctest::Approx(0.36).epsilon(1e-14));

  size_t count = 0;
  REQUIRE(qse_channel_kraus_count(ad.get(), &count) == QSE_OK);
  CHECK(count == 2);
  double kre[4], kim[4];
  REQUIRE(qse_channel_kraus(ad.get(), 0, kre, kim) == QSE_OK);
  CHECK(kre[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(kre[3] == doctest::Approx(0.8).epsilon(1e-14));
  CHECK(qse_channel_kraus(ad.get(), 7, kre, kim) == QSE_ERR_DOMAIN);

  // Rebuild from the Kraus buffers.
  double all_re[8], all_im[8];
  for (size_t k = 0; k < 2; ++k) {
    REQUIRE(qse_channel_kraus(ad.get(), k, all_re + 4 * k, all_im + 4 * k) ==
            QSE_OK);
  }
  qse_channel* rebuilt_raw = nullptr;
  REQUIRE(qse_channel_from_kraus(all_re, all_im, 2, &rebuilt_raw) == QSE_OK);
  const ChannelPtr rebuilt(rebuilt_raw);
  double m2[9], t2[3];
  REQUIRE(qse_channel_affine(rebuilt.get(), m2, t2) == QSE_OK);
  for (int i = 0; i < 9; ++i) CHECK(std::abs(m2[i] - m[i]) <= 1e-12);

  // Composition: AD(0.3) then AD(0.2) equals AD(0.44).
  const ChannelPtr first = damping(0.3);
  const ChannelPtr then = damping(0.2);
  qse_channel* comp_raw = nullptr;
  REQUIRE(qse_channel_compose(first.get(), then.get(), &comp_raw) == QSE_OK);
  const ChannelPtr comp(comp_raw);
  REQUIRE(qse_channel_affine(comp.get(), m2, t2) == QSE_OK);
  CHECK(t2[2] == doctest::Approx(0.44).epsilon(1e-13));

  qse_channel_class cls;
  REQUIRE(qse_channel_classify(ad.get(), &cls) == QSE_OK);
  CHECK(cls == QSE_CHANNEL_DISCORD_CREATING);
  qse_channel* id_raw = nullptr;
  REQUIRE(qse_channel_identity(&id_raw) == QSE_OK);
  const ChannelPtr id(id_raw);
  REQUIRE(qse_channel_classify(id.get(), &cls) == QSE_OK);
  CHECK(cls == QSE_CHANNEL_UNITAL);
  CHECK(std::string(qse_channel_class_name(QSE_CHANNEL_UNITAL)) == "Unital");

  // A non-CP affine action is rejected with the right code.
  const double eye[9] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  const double shift[3] = {0, 0, 0.2};
  qse_channel* bad = nullptr;
  CHECK(qse_channel_from_affine(eye, shift, &bad) ==
        QSE_ERR_NOT_COMPLETELY_POSITIVE);
}

TEST_CASE("steering geometry through the C surface") {
  const StatePtr base = bell(0.9, -0.1, 0.09);
  const ChannelPtr ad = damping(0.36);
  qse_state* damped_raw = nullptr;
  REQUIRE(qse_apply_local_b(base.get(), ad.get(), &damped_raw) == QSE_OK);
  const StatePtr damped(damped_raw);

  qse_ellipsoid eb;
  REQUIRE(qse_steering_ellipsoid(damped.get(), 1, &eb) == QSE_OK);
  CHECK(eb.dim == 3);
  CHECK(eb.center[2] == doctest::Approx(0.36).epsilon(1e-12));
  CHECK(eb.semiaxes[0] == doctest::Approx(0.72).epsilon(1e-12));
  CHECK(eb.semiaxes[1] == doctest::Approx(0.08).epsilon(1e-12));
  CHECK(eb.semiaxes[2] == doctest::Approx(0.0576).epsilon(1e-12));
  // Axis columns are unit vectors.
  for (int k = 0; k < 3; ++k) {
    const double n = std::sqrt(eb.axes[3 * k] * eb.axes[3 * k] +
                               eb.axes[3 * k + 1] * eb.axes[3 * k + 1] +
                               eb.axes[3 * k + 2] * eb.axes[3 * k + 2]);
    CHECK(n == doctest::Approx(1.0).epsilon(1e-12));
  }

  qse_size size;
  REQUIRE(qse_ellipsoid_size(&eb, &size) == QSE_OK);
  CHECK(size.length == doctest::Approx(1.44).epsilon(1e-12));

  int flag = -1;
  REQUIRE(qse_contains_origin(&eb, 1e-9, &flag) == QSE_OK);
  CHECK(flag == 0);

  // Needle accessors demand dim <= 1.
  double len = 0.0;
  CHECK(qse_needle_length(&eb, &len) == QSE_ERR_NOT_A_NEEDLE);
  const StatePtr segment = bell(0.7, 0.0, 0.0);
  qse_ellipsoid needle;
  REQUIRE(qse_steering_ellipsoid(segment.get(), 0, &needle) == QSE_OK);
  REQUIRE(qse_needle_length(&needle, &len) == QSE_OK);
  CHECK(len == doctest::Approx(1.4).epsilon(1e-12));
  REQUIRE(qse_is_radial_segment(&needle, 1e-8, &flag) == QSE_OK);
  CHECK(flag == 1);

  qse_steered outcome;
  const double x[3] = {1.0, 0.0, 0.0};
  REQUIRE(qse_steered_state(segment.get(), x, 0, &outcome) == QSE_OK);
  CHECK(outcome.probability == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(outcome.bloch[0] == doctest::Approx(0.7).epsilon(1e-12));

  qse_state* norm_raw = nullptr;
  REQUIRE(qse_slocc_normalize(damped.get(), 0, &norm_raw) == QSE_OK);
  const StatePtr norm(norm_raw);
  double bloch[3];
  REQUIRE(qse_state_reduced_bloch(norm.get(), 1, bloch) == QSE_OK);
  CHECK(std::abs(bloch[0]) + std::abs(bloch[1]) + std::abs(bloch[2]) <= 1e-10);

  StringPtr json_text;
  {
    char* raw = nullptr;
    REQUIRE(qse_ellipsoid_to_json(&eb, &raw) == QSE_OK);
    json_text.reset(raw);
  }
  CHECK(std::string(json_text.get()).find("\"semiaxes\"") != std::string::npos);
}

TEST_CASE("correlation measures through the C surface") {
  const StatePtr werner = bell(-0.5, -0.5, -0.5);
  double bits = 0.0;
  REQUIRE(qse_entropy(werner.get(), &bits) == QSE_OK);
  CHECK(bits == doctest::Approx(1.5487949406953985).epsilon(1e-12));
  REQUIRE(qse_mutual_information(werner.get(), &bits) == QSE_OK);
  CHECK(bits == doctest::Approx(0.45120505930460153).epsilon(1e-12));

  double c = 0.0;
  REQUIRE(qse_concurrence(werner.get(), &c) == QSE_OK);
  CHECK(c == doctest::Approx(0.25).epsilon(1e-11));

  const StatePtr other = bell(0.8, -0.1, 0.09);
  const StatePtr revival_base = bell(0.9, -0.1, 0.09);
  double dist = 0.0;
  REQUIRE(qse_trace_distance(revival_base.get(), other.get(), &dist) == QSE_OK);
  CHECK(dist == doctest::Approx(0.05).epsilon(1e-12));

  int isx = 0;
  REQUIRE(qse_is_x_state(revival_base.get(), 1e-10, &isx) == QSE_OK);
  CHECK(isx == 1);

  qse_discord d;
  REQUIRE(qse_discord_b(revival_base.get(), &d) == QSE_OK);
  CHECK(d.discord == doctest::Approx(0.007225546012191719).epsilon(1e-8));
  CHECK(d.analytic == 1);
  REQUIRE(qse_discord_b_numeric(revival_base.get(), &d) == QSE_OK);
  CHECK(d.discord == doctest::Approx(0.007225546012191719).epsilon(1e-6));
  CHECK(d.analytic == 0);
  const double dirnorm = std::sqrt(d.direction[0] * d.direction[0] +
                                   d.direction[1] * d.direction[1] +
                                   d.direction[2] * d.direction[2]);
  CHECK(dirnorm == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("needle decomposition through the C surface") {
  // Equal mixture of |+>|1> and |0>|0> via its density matrix.
  const double h = 0.5;
  double re[16] = {0};
  double im[16] = {0};
  // |0><0| x |0><0| contributes at (0,0); |+><+| x |1><1| at rows/cols {1,3}.
  re[0 * 4 + 0] = h;
  re[1 * 4 + 1] = h * 0.5;
  re[1 * 4 + 3] = h * 0.5;
  re[3 * 4 + 1] = h * 0.5;
  re[3 * 4 + 3] = h * 0.5;
  qse_state* raw = nullptr;
  REQUIRE(qse_state_from_density(re, im, &raw) == QSE_OK);
  const StatePtr state(raw);

  qse_needle_parts parts;
  REQUIRE(qse_needle_decompose(state.get(), &parts) == QSE_OK);
  CHECK(parts.p[0] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(parts.p[1] == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(parts.residual <= 1e-9);
  // B blochs at +-z.
  CHECK(std::abs(parts.b_bloch[0][2]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(parts.b_bloch[1][2]) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(parts.b_bloch[0][2] * parts.b_bloch[1][2] < 0.0);

  qse_state* classical_raw = nullptr;
  qse_channel* channel_raw = nullptr;
  REQUIRE(qse_build_preparation(state.get(), &classical_raw, &channel_raw) ==
          QSE_OK);
  const StatePtr classical(classical_raw);
  const ChannelPtr channel(channel_raw);
  qse_state* rebuilt_raw = nullptr;
  REQUIRE(qse_apply_local_b(classical.get(), channel.get(), &rebuilt_raw) ==
          QSE_OK);
  const StatePtr rebuilt(rebuilt_raw);
  double re2[16], im2[16];
  REQUIRE(qse_state_density(rebuilt.get(), re2, im2) == QSE_OK);
  for (int i = 0; i < 16; ++i) {
    CHECK(std::abs(re2[i] - re[i]) <= 1e-9);
    CHECK(std::abs(im2[i] - im[i]) <= 1e-9);
  }

  qse_theorem report;
  REQUIRE(qse_theorem_report(state.get(), &report) == QSE_OK);
  CHECK(report.applicable == 1);
  CHECK(report.consistent == 1);
  CHECK(report.radial == 1);
  CHECK(report.eb_dim == 1);

  StringPtr tj;
  {
    char* t = nullptr;
    REQUIRE(qse_theorem_report_json(state.get(), &t) == QSE_OK);
    tj.reset(t);
  }
  CHECK(std::string(tj.get()).find("\"consistent\":true") != std::string::npos);

  // A full-rank state cannot be decomposed.
  const StatePtr fat = bell(-0.5, -0.5, -0.5);
  CHECK(qse_needle_decompose(fat.get(), &parts) == QSE_ERR_NOT_A_NEEDLE_STATE);
}

TEST_CASE("scan drivers and verify through the C surface") {
  StringPtr csv;
  {
    char* raw = nullptr;
    REQUIRE(qse_run_p_scan(
                R"({"bell_c": [0.9, -0.1, 0.0], "steps": 3, "p_end": 0.9})",
                &raw) == QSE_OK);
    csv.reset(raw);
  }
  const std::string text(csv.get());
  CHECK(text.rfind("# qse-toolkit v1, columns:", 0) == 0);
  CHECK(text.find("\np,discord,") != std::string::npos);

  char* bad = nullptr;
  CHECK(qse_run_p_scan("{\"steps\": 1}", &bad) == QSE_ERR_DOMAIN);
  CHECK(qse_run_p_scan("not json", &bad) == QSE_ERR_PARSE);

  StringPtr c3;
  {
    char* raw = nullptr;
    REQUIRE(qse_run_c3_scan(
                R"({"c3_start": 0.0, "c3_end": 0.1, "c3_steps": 2, "p_steps": 11})",
                &raw) == QSE_OK);
    c3.reset(raw);
  }
  CHECK(std::string(c3.get()).find("c3,physical,D0,Dm,dD,p_rise,p_peak") !=
        std::string::npos);

  StringPtr demo;
  {
    char* raw = nullptr;
    REQUIRE(qse_needle_demo(0.1, &raw) == QSE_OK);
    demo.reset(raw);
  }
  CHECK(std::string(demo.get()).find("transform_forbidden") != std::string::npos);
  CHECK(qse_needle_demo(-0.5, &bad) == QSE_ERR_DOMAIN);

  char* report = nullptr;
  int ok = 0;
  REQUIRE(qse_run_verify(3, 20260816ull, &report, &ok) == QSE_OK);
  const StringPtr report_guard(report);
  CHECK(ok == 1);
  CHECK(std::string(report).find("[PASS]") != std::string::npos);
}
