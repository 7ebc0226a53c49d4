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
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qse/pauli.hpp"

namespace qse {

inline constexpr const char* kCsvSchemaTag = "qse-toolkit v1";

// What to sweep: an input state (inline Bell-diagonal coefficients or a state
// file) pushed through a one-parameter channel family (amplitude damping by
// default; "identity" or a fixed channel file make the sweep constant).
// The grid is either p in [p_start, p_end] or, when gamma is set, a time grid
// mapped through p = 1 - exp(-gamma t).
struct ScanConfig {
  std::optional<std::array<double, 3>> bell_c =
      std::array<double, 3>{0.9, -0.1, 0.0};
  std::optional<std::string> state_path;

  std::string channel_kind = "ad";  // "ad" | "identity" | "file"
  std::optional<std::string> channel_path;

  double p_start = 0.0;
  double p_end = 1.0;
  int steps = 201;
  std::optional<double> gamma;  // with t_start/t_end: time grid instead of p grid
  double t_start = 0.0;
  double t_end = 1.0;

  std::vector<std::string> columns;  // empty = all
  std::uint64_t seed = 42;
};

// One sweep point.  All metric fields are finite for physical inputs.
struct ScanRow {
  double p = 0.0;
  double discord = 0.0;
  double concurrence = 0.0;
  double mutual_info = 0.0;
  double la = 0.0;    // length of the A-side ellipsoid
  double lb = 0.0;    // length of the B-side ellipsoid
  double vola = 0.0;
  double volb = 0.0;
  bool originb = false;  // B ellipsoid contains the origin
};

ScanConfig scan_config_from_json(const nlohmann::json& j);
std::vector<ScanRow> run_p_scan(const ScanConfig& config);
std::string scan_csv(const std::vector<ScanRow>& rows, const ScanConfig& config);

// Sweep of the Bell-diagonal c3 coefficient: for each c3, run a damping scan of
// the discord and summarize its revival shape.
struct C3ScanConfig {
  double c1 = 0.9;
  double c2 = -0.1;
  double c3_start = 0.0;
  double c3_end = 0.2;
  int c3_steps = 21;
  int p_steps = 201;
  std::uint64_t seed = 42;
};

struct C3Row {
  double c3 = 0.0;
  bool physical = true;  // unphysical (c1,c2,c3) rows carry NaN metrics
  double d0 = 0.0;       // discord at p = 0
  double dm = 0.0;       // maximal discord over the sweep (p < 1)
  double delta_d = 0.0;  // valley-to-peak discord gain (0 when the peak is at p=0)
  double p_rise = -1.0;  // first grid p where discord exceeds the running min by 1e-5
  double p_peak = 0.0;
};

C3ScanConfig c3_config_from_json(const nlohmann::json& j);
std::vector<C3Row> run_c3_scan(const C3ScanConfig& config);
std::string c3_csv(const std::vector<C3Row>& rows, const C3ScanConfig& config);

// Side-by-side of a two-product mixture with radially blurred B components
// (delta > 0) against its sharp counterpart (pure B components): lengths,
// discord, and whether a local channel on B could turn the blurred state into
// the sharp one.  It cannot when that would require growing the A-side length.
struct NeedleDemo {
  double delta = 0.1;
  double mixed_la = 0.0;
  double mixed_lb = 0.0;
  double mixed_discord = 0.0;
  double sharp_la = 0.0;
  double sharp_lb = 0.0;
  double sharp_discord = 0.0;
  bool forbidden = false;  // mixed -> sharp ruled out by the length criterion
};

NeedleDemo needle_demo(double delta);
nlohmann::json needle_demo_to_json(const NeedleDemo& d);

}  // namespace qse
