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

#include <string>

#include <json.hpp>

#include "qse/channels.hpp"
#include "qse/decomposition.hpp"
#include "qse/pauli.hpp"
#include "qse/steering.hpp"

namespace qse {

// State JSON formats:
//   {"format": "bell_diag", "c": [c1, c2, c3]}
//   {"format": "theta",     "theta": [[4x4 reals]]}
//   {"format": "density",   "re": [[4x4]], "im": [[4x4]]}
// Malformed documents raise ParseError; physically invalid payloads raise the
// usual InvalidState / NotAState.
TwoQubitState state_from_json(const nlohmann::json& j);
nlohmann::json state_to_json(const TwoQubitState& state);  // density format

// Channel JSON formats:
//   {"format": "ad",     "p": 0.3}
//   {"format": "kraus",  "ops": [{"re": [[2x2]], "im": [[2x2]]}, ...]}
//   {"format": "affine", "M": [[3x3]], "t": [t1, t2, t3]}
QubitChannel channel_from_json(const nlohmann::json& j);

nlohmann::json ellipsoid_to_json(const Ellipsoid& e);
nlohmann::json theorem_report_to_json(const TheoremReport& r);

// File wrappers; raise IoError when the path cannot be read / parsed as JSON.
TwoQubitState load_state(const std::string& path);
QubitChannel load_channel(const std::string& path);
nlohmann::json load_json(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace qse
