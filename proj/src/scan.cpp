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

#include "qse/scan.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "qse/channels.hpp"
#include "qse/correlations.hpp"
#include "qse/io.hpp"
#include "qse/steering.hpp"

namespace qse {

namespace {

using nlohmann::json;

const std::vector<std::string> kAllColumns = {
    "p",  "discord", "concurrence", "mutual_info", "lA",
    "lB", "volA",    "volB",        "originB"};

// At the endpoint of a damping sweep the conditional minimization degenerates;
// the discord column is evaluated just inside instead.
constexpr double kEndpointBackoff = 1e-9;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> resolve_columns(const std::vector<std::string>& requested) {
  if (requested.empty()) return kAllColumns;
  std::vector<std::string> out;
  for (const auto& name : kAllColumns)
    for (const auto& want : requested)
      if (name == want) {
        out.push_back(name);
        break;
      }
  if (out.size() != requested.size())
    fail(ErrorCode::ParseError, "unknown column name in column list");
  return out;
}

double column_value(const ScanRow& row, const std::string& name) {
  if (name == "p") return row.p;
  if (name == "discord") return row.discord;
  if (name == "concurrence") return row.concurrence;
  if (name == "mutual_info") return row.mutual_info;
  if (name == "lA") return row.la;
  if (name == "lB") return row.lb;
  if (name == "volA") return row.vola;
  if (name == "volB") return row.volb;
  return row.originb ? 1.0 : 0.0;  // originB
}

TwoQubitState base_state(const ScanConfig& config) {
  if (config.state_path) return load_state(*config.state_path);
  if (config.bell_c)
    return bell_diagonal_state((*config.bell_c)[0], (*config.bell_c)[1],
                               (*config.bell_c)[2]);
  fail(ErrorCode::ParseError, "scan config provides no input state");
}

double discord_of(const TwoQubitState& state, std::uint64_t seed) {
  if (is_x_state(state)) return discord_x_state(state).discord;
  DiscordOptions opts;
  opts.seed = seed;
  return discord_b_numeric(state, opts).discord;
}

// Discord of the damped Bell-diagonal state, with the endpoint backoff.
double bell_damped_discord(double c1, double c2, double c3, double p,
                           std::uint64_t seed) {
  const double pe = p > 1.0 - 1e-12 ? 1.0 - kEndpointBackoff : p;
  const TwoQubitState out =
      apply_local_b(bell_diagonal_state(c1, c2, c3), amplitude_damping(pe));
  return discord_of(out, seed);
}

std::array<double, 4> bell_diagonal_eigenvalues(double c1, double c2, double c3) {
  return {0.25 * (1.0 - c1 - c2 - c3), 0.25 * (1.0 - c1 + c2 + c3),
          0.25 * (1.0 + c1 - c2 + c3), 0.25 * (1.0 + c1 + c2 - c3)};
}

}  // namespace

ScanConfig scan_config_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "scan config must be a JSON object");
  ScanConfig c;
  if (j.contains("bell_c") && j.contains("state_path"))
    fail(ErrorCode::ParseError, "give either bell_c or state_path, not both");
  if (j.contains("bell_c")) {
    const auto& arr = j["bell_c"];
    if (!arr.is_array() || arr.size() != 3)
      fail(ErrorCode::ParseError, "bell_c must be [c1, c2, c3]");
    c.bell_c = std::array<double, 3>{arr[0].get<double>(), arr[1].get<double>(),
                                     arr[2].get<double>()};
    c.state_path.reset();
  }
  if (j.contains("state_path")) {
    c.state_path = j["state_path"].get<std::string>();
    c.bell_c.reset();
  }
  if (j.contains("channel_kind")) c.channel_kind = j["channel_kind"].get<std::string>();
  if (j.contains("channel_path")) c.channel_path = j["channel_path"].get<std::string>();
  if (j.contains("p_start")) c.p_start = j["p_start"].get<double>();
  if (j.contains("p_end")) c.p_end = j["p_end"].get<double>();
  if (j.contains("steps")) c.steps = j["steps"].get<int>();
  if (j.contains("gamma")) c.gamma = j["gamma"].get<double>();
  if (j.contains("t_start")) c.t_start = j["t_start"].get<double>();
  if (j.contains("t_end")) c.t_end = j["t_end"].get<double>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("columns")) {
    c.columns.clear();
    for (const auto& col : j["columns"]) c.columns.push_back(col.get<std::string>());
  }
  return c;
}

std::vector<ScanRow> run_p_scan(const ScanConfig& config) {
  if (config.steps < 2)
    fail(ErrorCode::DomainError, "steps must be at least 2");
  if (!config.gamma &&
      (config.p_start < 0.0 || config.p_end > 1.0 || config.p_start > config.p_end))
    fail(ErrorCode::DomainError, "p grid must satisfy 0 <= p_start <= p_end <= 1");
  if (config.gamma && (*config.gamma < 0.0 || config.t_start > config.t_end))
    fail(ErrorCode::DomainError, "time grid must satisfy gamma >= 0, t_start <= t_end");
  resolve_columns(config.columns);  // validate early

  const TwoQubitState base = base_state(config);
  std::optional<QubitChannel> fixed;
  if (config.channel_kind == "identity") {
    fixed = identity_channel();
  } else if (config.channel_kind == "file") {
    if (!config.channel_path)
      fail(ErrorCode::ParseError, "channel_kind \"file\" needs channel_path");
    fixed = load_channel(*config.channel_path);
  } else if (config.channel_kind != "ad") {
    fail(ErrorCode::ParseError, "unknown channel kind \"" + config.channel_kind + "\"");
  }

  std::vector<ScanRow> rows;
  rows.reserve(config.steps);
  for (int i = 0; i < config.steps; ++i) {
    const double frac = double(i) / (config.steps - 1);
    double p;
    if (config.gamma) {
      const double t = config.t_start + (config.t_end - config.t_start) * frac;
      p = damping_probability(*config.gamma, t);
    } else {
      p = config.p_start + (config.p_end - config.p_start) * frac;
    }

    const QubitChannel& ch = fixed ? *fixed : amplitude_damping(p);
    const TwoQubitState out = apply_local_b(base, ch);

    ScanRow row;
    row.p = p;
    if (!fixed && p > 1.0 - 1e-12) {
      row.discord = discord_of(
          apply_local_b(base, amplitude_damping(1.0 - kEndpointBackoff)),
          config.seed);
    } else {
      row.discord = discord_of(out, config.seed);
    }
    row.concurrence = concurrence(out);
    row.mutual_info = mutual_information(out);
    const Ellipsoid ea = steering_ellipsoid(out, Side::A);
    const Ellipsoid eb = steering_ellipsoid(out, Side::B);
    const EllipsoidSize sa = ellipsoid_size(ea), sb = ellipsoid_size(eb);
    row.la = sa.length;
    row.lb = sb.length;
    row.vola = sa.volume;
    row.volb = sb.volume;
    row.originb = contains_origin(eb);
    rows.push_back(row);
  }
  return rows;
}

std::string scan_csv(const std::vector<ScanRow>& rows, const ScanConfig& config) {
  const std::vector<std::string> cols = resolve_columns(config.columns);
  std::string out = "# ";
  out += kCsvSchemaTag;
  out += ", columns: " + join(cols, ",") + "\n";
  out += join(cols, ",") + "\n";
  for (const auto& row : rows) {
    std::vector<std::string> cells;
    cells.reserve(cols.size());
    for (const auto& name : cols) {
      if (name == "originB")
        cells.push_back(row.originb ? "1" : "0");
      else
        cells.push_back(fmt(column_value(row, name)));
    }
    out += join(cells, ",") + "\n";
  }
  return out;
}

C3ScanConfig c3_config_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "c3scan config must be a JSON object");
  C3ScanConfig c;
  if (j.contains("c1")) c.c1 = j["c1"].get<double>();
  if (j.contains("c2")) c.c2 = j["c2"].get<double>();
  if (j.contains("c3_start")) c.c3_start = j["c3_start"].get<double>();
  if (j.contains("c3_end")) c.c3_end = j["c3_end"].get<double>();
  if (j.contains("c3_steps")) c.c3_steps = j["c3_steps"].get<int>();
  if (j.contains("p_steps")) c.p_steps = j["p_steps"].get<int>();
  if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
  return c;
}

std::vector<C3Row> run_c3_scan(const C3ScanConfig& config) {
  if (config.c3_steps < 1 || config.p_steps < 2)
    fail(ErrorCode::DomainError, "c3_steps must be >= 1 and p_steps >= 2");

  std::vector<C3Row> rows;
  rows.reserve(config.c3_steps);
  for (int k = 0; k < config.c3_steps; ++k) {
    const double frac =
        config.c3_steps == 1 ? 0.0 : double(k) / (config.c3_steps - 1);
    C3Row row;
    row.c3 = config.c3_start + (config.c3_end - config.c3_start) * frac;

    const auto ev = bell_diagonal_eigenvalues(config.c1, config.c2, row.c3);
    row.physical = true;
    for (double v : ev)
      if (v < -1e-12) row.physical = false;
    if (!row.physical) {
      const double nan = std::numeric_limits<double>::quiet_NaN();
      row.d0 = row.dm = row.delta_d = row.p_peak = nan;
      row.p_rise = nan;
      rows.push_back(row);
      continue;
    }

    // Damping sweep of the discord; summarize the dip-and-revival shape.
    std::vector<double> p(config.p_steps), d(config.p_steps);
    for (int i = 0; i < config.p_steps; ++i) {
      p[i] = double(i) / (config.p_steps - 1);
      d[i] = bell_damped_discord(config.c1, config.c2, row.c3, p[i], config.seed);
    }
    int peak = 0;
    for (int i = 1; i < config.p_steps; ++i) {
      if (p[i] > 1.0 - 1e-12) continue;  // endpoint excluded from the peak search
      if (d[i] > d[peak]) peak = i;
    }
    row.d0 = d[0];
    row.dm = d[peak];
    row.p_peak = p[peak];
    if (peak == 0) {
      row.delta_d = 0.0;
    } else {
      double valley = d[1];
      for (int i = 1; i <= peak; ++i) valley = std::min(valley, d[i]);
      row.delta_d = std::max(0.0, d[peak] - valley);
    }
    row.p_rise = -1.0;
    double running_min = d[0];
    for (int i = 1; i < config.p_steps; ++i) {
      if (d[i] > running_min + 1e-5) {
        row.p_rise = p[i];
        break;
      }
      running_min = std::min(running_min, d[i]);
    }
    rows.push_back(row);
  }
  return rows;
}

std::string c3_csv(const std::vector<C3Row>& rows, const C3ScanConfig&) {
  std::string out = "# ";
  out += kCsvSchemaTag;
  out += ", columns: c3,physical,D0,Dm,dD,p_rise,p_peak\n";
  out += "c3,physical,D0,Dm,dD,p_rise,p_peak\n";
  for (const auto& row : rows) {
    std::vector<std::string> cells{fmt(row.c3),      row.physical ? "1" : "0",
                                   fmt(row.d0),      fmt(row.dm),
                                   fmt(row.delta_d), fmt(row.p_rise),
                                   fmt(row.p_peak)};
    out += join(cells, ",") + "\n";
  }
  return out;
}

NeedleDemo needle_demo(double delta) {
  if (delta < 0.0 || delta >= 1.0)
    fail(ErrorCode::DomainError, "delta must lie in [0, 1)");

  const SingleQubitState plus = SingleQubitState::from_bloch({1.0, 0.0, 0.0});
  const SingleQubitState zero = SingleQubitState::from_bloch({0.0, 0.0, 1.0});
  // B components at Bloch -/+ (1-delta) e3 (blurred) vs -/+ e3 (sharp).
  auto along_z = [](double z) {
    return SingleQubitState::from_bloch({0.0, 0.0, z});
  };
  const TwoQubitState mixed = two_component_state(
      0.5, plus, along_z(-(1.0 - delta)), zero, along_z(1.0 - delta));
  const TwoQubitState sharp =
      two_component_state(0.5, plus, along_z(-1.0), zero, along_z(1.0));

  NeedleDemo d;
  d.delta = delta;
  d.mixed_la = ellipsoid_size(steering_ellipsoid(mixed, Side::A)).length;
  d.mixed_lb = ellipsoid_size(steering_ellipsoid(mixed, Side::B)).length;
  d.mixed_discord = discord_b(mixed).discord;
  d.sharp_la = ellipsoid_size(steering_ellipsoid(sharp, Side::A)).length;
  d.sharp_lb = ellipsoid_size(steering_ellipsoid(sharp, Side::B)).length;
  d.sharp_discord = discord_b(sharp).discord;
  d.forbidden = d.sharp_la > d.mixed_la + 1e-12;
  return d;
}

nlohmann::json needle_demo_to_json(const NeedleDemo& d) {
  return json{
      {"delta", d.delta},
      {"mixed", json{{"lA", d.mixed_la}, {"lB", d.mixed_lb}, {"discord", d.mixed_discord}}},
      {"sharp", json{{"lA", d.sharp_la}, {"lB", d.sharp_lb}, {"discord", d.sharp_discord}}},
      {"transform_forbidden", d.forbidden},
      {"criterion", "a local channel on B cannot increase the A-side needle length"}};
}

}  // namespace qse
