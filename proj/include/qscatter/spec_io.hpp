// Copyright 2026 The qscatter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Text input: angle expressions and correlator specs in JSON.

#pragma once

#include <string_view>

#include "qscatter/scattering.hpp"

namespace qscatter {

/**
 * Arithmetic angle expression in radians. Supports + - * /, parentheses,
 * `pi`, decimal literals and the functions acos, asin, cos, sin, sqrt. An
 * optional `theta=` prefix is ignored, so `theta=acos(-0.75)` is accepted.
 * Parsing never consults the locale.
 */
double parse_angle(std::string_view text);

/**
 * Correlator spec, e.g.
 *
 *   {"system_qubits": 2,
 *    "slots": [
 *      {"observable": ["Z", "I"], "evolution": [{"gate": "ry", "qubit": 0, "angle": "pi/3"}]},
 *      {"observable": "pm:gamma"}]}
 *
 * Per-qubit tokens: I, X, Y, Z, sigma_theta(<angle>), pentagram:<j>. A single
 * string names a joint observable (pm:<label>, only on two qubits). The
 * evolution is a gate list applied in order (rx, ry, rz with an angle; h);
 * angles may be numbers or expression strings.
 */
TemporalCorrelationSpec parse_spec_json(std::string_view text);

}  // namespace qscatter
