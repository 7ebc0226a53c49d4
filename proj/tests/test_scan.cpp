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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "qse/channels.hpp"
#include "qse/correlations.hpp"
#include "qse/pauli.hpp"
#include "qse/scan.hpp"

using namespace qse;
using nlohmann::json;

TEST_CASE("config parsing: defaults, keys, and conflicts") {
  const ScanConfig d = scan_config_from_json(json::object());
  CHECK(d.bell_c.has_value());
  CHECK((*d.bell_c)[0] == doctest::Approx(0.9));
  CHECK(d.steps == 201);
  CHECK(d.channel_kind == "ad");

  const json doc = {{"bell_c", {0.7, 0.0, 0.0}}, {"p_start", 0.1},
                    {"p_end", 0.9},              {"steps", 5},
                    {"seed", 7},                 {"columns", {"p", "discord"}}};
  const ScanConfig c = scan_config_from_json(doc);
  CHECK((*c.bell_c)[0] == doctest::Approx(0.7));
  CHECK(c.steps == 5);
  CHECK(c.seed == 7);
  CHECK(c.columns.size() == 2);

  // A state path and inline coefficients are mutually exclusive.
  CHECK_THROWS_AS(scan_config_from_json(
                      json{{"bell_c", {0.7, 0.0, 0.0}}, {"state_path", "x.json"}}),
                  Error);
}

TEST_CASE("run_p_scan validates its domain") {
  ScanConfig c;
  c.steps = 1;
  CHECK_THROWS_AS(run_p_scan(c), Error);
  try {
    run_p_scan(c);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DomainError);
  }

  ScanConfig bad;
  bad.p_start = -0.2;
  CHECK_THROWS_AS(run_p_scan(bad), Error);
  ScanConfig rev;
  rev.p_start = 0.8;
  rev.p_end = 0.2;
  CHECK_THROWS_AS(run_p_scan(rev), Error);

  ScanConfig cols;
  cols.steps = 2;
  cols.columns = {"p", "entropy_of_purple"};
  CHECK_THROWS_AS(run_p_scan(cols), Error);
  try {
    run_p_scan(cols);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("p grid: endpoints and spacing") {
  ScanConfig c;
  c.bell_c = std::array<double, 3>{0.9, -0.1, 0.0};
  c.p_end = 0.9;
  c.steps = 5;
  const auto rows = run_p_scan(c);
  REQUIRE(rows.size() == 5);
  const double expected[] = {0.0, 0.225, 0.45, 0.675, 0.9};
  for (int i = 0; i < 5; ++i) CHECK(rows[i].p == doctest::Approx(expected[i]).epsilon(1e-12));
}

TEST_CASE("time grids map through p = 1 - exp(-gamma t)") {
  ScanConfig c;
  c.bell_c = std::array<double, 3>{0.7, 0.0, 0.0};
  c.gamma = 1.0;
  c.t_start = 0.0;
  c.t_end = 1.0;
  c.steps = 2;
  const auto rows = run_p_scan(c);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].p == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(rows[1].p == doctest::Approx(0.6321205588285577).epsilon(1e-14));
}

TEST_CASE("scan rows reproduce direct computations") {
  ScanConfig c;
  c.bell_c = std::array<double, 3>{0.9, -0.1, 0.09};
  c.p_end = 0.9;
  c.steps = 4;
  const auto rows = run_p_scan(c);
  REQUIRE(rows.size() == 4);
  const TwoQubitState base = bell_diagonal_state(0.9, -0.1, 0.09);
  for (const ScanRow& row : rows) {
    const TwoQubitState state = apply_local_b(base, amplitude_damping(row.p));
    CHECK(row.discord ==
          doctest::Approx(discord_b(state).discord).epsilon(1e-12));
    CHECK(row.concurrence ==
          doctest::Approx(concurrence(state)).epsilon(1e-12));
    CHECK(row.mutual_info ==
          doctest::Approx(mutual_information(state)).epsilon(1e-12));
    CHECK(std::isfinite(row.la));
    CHECK(std::isfinite(row.volb));
  }
  // Frozen spot value: concurrence at p = 0 is 0.045.
  CHECK(rows[0].concurrence == doctest::Approx(0.045).epsilon(1e-9));
  CHECK(rows[0].originb);  // the undamped ellipsoid is origin-centered
}

TEST_CASE("identity-channel sweeps are constant rows") {
  ScanConfig c;
  c.bell_c = std::array<double, 3>{0.9, -0.1, 0.09};
  c.channel_kind = "identity";
  c.steps = 3;
  const auto rows = run_p_scan(c);
  REQUIRE(rows.size() == 3);
  for (const ScanRow& row : rows) {
    CHECK(row.discord == doctest::Approx(rows[0].discord).epsilon(1e-13));
    CHECK(row.concurrence == doctest::Approx(0.045).epsilon(1e-9));
    CHECK(row.la == doctest::Approx(rows[0].la).epsilon(1e-13));
  }
}

TEST_CASE("the damping endpoint is evaluated just inside p = 1") {
  // At p = 1 the state is a product; its discord column must come out 0 (the
  // backoff evaluates at 1 - 1e-9), not NaN.  The geometry columns report the
  // true endpoint: both ellipsoids are points, so both lengths are exactly 0.
  ScanConfig c;
  c.bell_c = std::array<double, 3>{0.9, -0.1, 0.09};
  c.steps = 2;  // p = 0, 1
  const auto rows = run_p_scan(c);
  REQUIRE(rows.size() == 2);
  CHECK(rows[1].p == doctest::Approx(1.0));
  CHECK(std::isfinite(rows[1].discord));
  CHECK(rows[1].discord <= 1e-5);
  CHECK(rows[1].la == 0.0);
  CHECK(rows[1].lb == 0.0);
  CHECK(rows[1].volb == 0.0);
}

TEST_CASE("CSV output: schema tag, header, and cell format") {
  ScanConfig c;
  c.bell_c = std::array<double, 3>{0.9, -0.1, 0.0};
  c.p_end = 0.9;
  c.steps = 3;
  const auto rows = run_p_scan(c);
  const std::string csv = scan_csv(rows, c);

  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line ==
        "# qse-toolkit v1, columns: p,discord,concurrence,mutual_info,lA,lB,volA,volB,originB");
  std::getline(in, line);
  CHECK(line == "p,discord,concurrence,mutual_info,lA,lB,volA,volB,originB");
  int data_lines = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    ++data_lines;
    // originB serializes as 0/1.
    const auto last_comma = line.rfind(',');
    const std::string flag = line.substr(last_comma + 1);
    CHECK((flag == "0" || flag == "1"));
  }
  CHECK(data_lines == 3);

  // Column selection re-orders nothing and drops the rest.
  ScanConfig two = c;
  two.columns = {"p", "lA"};
  const std::string csv2 = scan_csv(run_p_scan(two), two);
  std::istringstream in2(csv2);
  std::getline(in2, line);
  CHECK(line == "# qse-toolkit v1, columns: p,lA");

  // Determinism: byte-identical output on repeated runs.
  CHECK(scan_csv(run_p_scan(c), c) == csv);
}

TEST_CASE("c3 sweep: row count, physicality flags, and frozen values") {
  C3ScanConfig c;
  c.c1 = 0.9;
  c.c2 = -0.1;
  c.c3_start = 0.0;
  c.c3_end = 0.5;
  c.c3_steps = 6;  // c3 = 0, 0.1, 0.2, 0.3, 0.4, 0.5
  c.p_steps = 41;
  const auto rows = run_c3_scan(c);
  REQUIRE(rows.size() == 6);

  // (0.9, -0.1, c3) leaves the tetrahedron at c3 > 0.2: the binding
  // eigenvalue is (1 - c1 - c2 - c3)/4 = (0.2 - c3)/4.
  for (int i = 0; i < 6; ++i) {
    const double c3 = 0.1 * i;
    const auto l = oracle::bell_lambdas(0.9, -0.1, c3);
    const bool physical = *std::min_element(l.begin(), l.end()) >= -1e-12;
    CHECK(rows[i].physical == physical);
    if (physical) {
      CHECK(rows[i].d0 ==
            doctest::Approx(oracle::luo_discord(0.9, -0.1, c3)).epsilon(1e-6));
      CHECK(std::isfinite(rows[i].dm));
      CHECK(rows[i].dm >= rows[i].d0 - 1e-12);
    } else {
      CHECK(std::isnan(rows[i].d0));
      CHECK(std::isnan(rows[i].dm));
    }
  }

  const std::string csv = c3_csv(rows, c);
  CHECK(csv.rfind("# qse-toolkit v1, columns: c3,physical,D0,Dm,dD,p_rise,p_peak",
                  0) == 0);

  CHECK_THROWS_AS(run_c3_scan(C3ScanConfig{0.9, -0.1, 0.0, 0.2, 0, 41, 1}), Error);
}

TEST_CASE("c3 config parsing") {
  const json doc = {{"c1", 0.8},      {"c2", -0.2},    {"c3_start", 0.05},
                    {"c3_end", 0.15}, {"c3_steps", 3}, {"p_steps", 21},
                    {"seed", 99}};
  const C3ScanConfig c = c3_config_from_json(doc);
  CHECK(c.c1 == doctest::Approx(0.8));
  CHECK(c.c3_steps == 3);
  CHECK(c.seed == 99);
  const C3ScanConfig d = c3_config_from_json(json::object());
  CHECK(d.c1 == doctest::Approx(0.9));
  CHECK(d.p_steps == 201);
}

TEST_CASE("needle demo: frozen lengths, discord gap, and the length veto") {
  const NeedleDemo sharp = needle_demo(0.0);
  CHECK(sharp.mixed_la == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(sharp.sharp_la == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK_FALSE(sharp.forbidden);  // nothing to forbid: same lengths

  const NeedleDemo d = needle_demo(0.1);
  CHECK(d.mixed_la == doctest::Approx(0.9 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(d.mixed_lb == doctest::Approx(1.8).epsilon(1e-12));
  CHECK(d.sharp_la == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(d.sharp_lb == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(d.mixed_discord <= 1e-10);
  CHECK(d.sharp_discord <= 1e-10);
  CHECK(d.forbidden);  // growing lA from 1.27 to 1.41 is impossible locally

  const json j = needle_demo_to_json(d);
  CHECK(j["delta"] == doctest::Approx(0.1));
  CHECK(j["transform_forbidden"] == true);
  CHECK(j["mixed"]["lA"].get<double>() ==
        doctest::Approx(1.2727922061357856).epsilon(1e-9));
  CHECK(j["sharp"]["lA"].get<double>() ==
        doctest::Approx(1.4142135623730951).epsilon(1e-9));

  CHECK_THROWS_AS(needle_demo(-0.1), Error);
  CHECK_THROWS_AS(needle_demo(1.0), Error);
}
