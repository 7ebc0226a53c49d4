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

#include "qse/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace qse {

namespace {

using nlohmann::json;

// Reads j[key] as an n x n matrix of numbers.
template <int N>
Eigen::Matrix<double, N, N> real_matrix(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array() || j[key].size() != N)
    fail(ErrorCode::ParseError,
         std::string("expected \"") + key + "\" as a " + std::to_string(N) +
             "x" + std::to_string(N) + " array");
  Eigen::Matrix<double, N, N> m;
  for (int r = 0; r < N; ++r) {
    const auto& row = j[key][r];
    if (!row.is_array() || row.size() != N)
      fail(ErrorCode::ParseError, std::string("bad row in \"") + key + "\"");
    for (int c = 0; c < N; ++c) {
      if (!row[c].is_number())
        fail(ErrorCode::ParseError, std::string("non-numeric entry in \"") + key + "\"");
      m(r, c) = row[c].get<double>();
    }
  }
  return m;
}

template <int N>
Eigen::Matrix<complexd, N, N> complex_matrix(const json& j) {
  const auto re = real_matrix<N>(j, "re");
  Eigen::Matrix<double, N, N> im = Eigen::Matrix<double, N, N>::Zero();
  if (j.contains("im")) im = real_matrix<N>(j, "im");
  Eigen::Matrix<complexd, N, N> m;
  for (int r = 0; r < N; ++r)
    for (int c = 0; c < N; ++c) m(r, c) = complexd(re(r, c), im(r, c));
  return m;
}

std::string format_field(const json& j) {
  if (!j.contains("format") || !j["format"].is_string())
    fail(ErrorCode::ParseError, "missing \"format\" field");
  return j["format"].get<std::string>();
}

json vector3_to_json(const Vector3d& v) { return json::array({v(0), v(1), v(2)}); }

}  // namespace

TwoQubitState state_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "state document must be an object");
  const std::string format = format_field(j);
  if (format == "bell_diag") {
    if (!j.contains("c") || !j["c"].is_array() || j["c"].size() != 3)
      fail(ErrorCode::ParseError, "bell_diag needs \"c\": [c1, c2, c3]");
    return bell_diagonal_state(j["c"][0].get<double>(), j["c"][1].get<double>(),
                               j["c"][2].get<double>());
  }
  if (format == "theta") {
    return density_from_theta(PauliTheta(real_matrix<4>(j, "theta")));
  }
  if (format == "density") {
    return TwoQubitState(complex_matrix<4>(j));
  }
  fail(ErrorCode::ParseError, "unknown state format \"" + format + "\"");
}

json state_to_json(const TwoQubitState& state) {
  json re = json::array(), im = json::array();
  for (int r = 0; r < 4; ++r) {
    json re_row = json::array(), im_row = json::array();
    for (int c = 0; c < 4; ++c) {
      re_row.push_back(state.density()(r, c).real());
      im_row.push_back(state.density()(r, c).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  return json{{"format", "density"}, {"re", re}, {"im", im}};
}

QubitChannel channel_from_json(const json& j) {
  if (!j.is_object()) fail(ErrorCode::ParseError, "channel document must be an object");
  const std::string format = format_field(j);
  if (format == "ad") {
    if (!j.contains("p") || !j["p"].is_number())
      fail(ErrorCode::ParseError, "ad needs numeric \"p\"");
    return amplitude_damping(j["p"].get<double>());
  }
  if (format == "kraus") {
    if (!j.contains("ops") || !j["ops"].is_array() || j["ops"].empty())
      fail(ErrorCode::ParseError, "kraus needs a non-empty \"ops\" array");
    std::vector<Matrix2c> ops;
    for (const auto& op : j["ops"]) ops.push_back(complex_matrix<2>(op));
    return channel_from_kraus(ops);
  }
  if (format == "affine") {
    const Matrix3d m = real_matrix<3>(j, "M");
    if (!j.contains("t") || !j["t"].is_array() || j["t"].size() != 3)
      fail(ErrorCode::ParseError, "affine needs \"t\": [t1, t2, t3]");
    return affine_channel(
        m, Vector3d(j["t"][0].get<double>(), j["t"][1].get<double>(),
                    j["t"][2].get<double>()));
  }
  fail(ErrorCode::ParseError, "unknown channel format \"" + format + "\"");
}

json ellipsoid_to_json(const Ellipsoid& e) {
  json axes = json::array();
  for (int k = 0; k < 3; ++k)
    axes.push_back(vector3_to_json(e.orientation.col(k)));
  return json{{"center", vector3_to_json(e.center)},
              {"semiaxes", vector3_to_json(e.semiaxes)},
              {"axes", axes},
              {"dim", e.dim}};
}

json theorem_report_to_json(const TheoremReport& r) {
  auto finite_or_null = [](double v) {
    return std::isfinite(v) ? json(v) : json(nullptr);
  };
  return json{{"eb_dim", r.eb_dim},
              {"radial", r.radial},
              {"discord", r.discord},
              {"applicable", r.applicable},
              {"decomposed", r.decomposed},
              {"decomposition_residual", finite_or_null(r.decomposition_residual)},
              {"preparation_residual", finite_or_null(r.preparation_residual)},
              {"consistent", r.consistent}};
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open " + path);
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) fail(ErrorCode::ParseError, "invalid JSON in " + path);
  return j;
}

TwoQubitState load_state(const std::string& path) {
  return state_from_json(load_json(path));
}

QubitChannel load_channel(const std::string& path) {
  return channel_from_json(load_json(path));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::IoError, "cannot open " + path + " for writing");
  out << content;
  if (!out) fail(ErrorCode::IoError, "failed writing " + path);
}

}  // namespace qse
