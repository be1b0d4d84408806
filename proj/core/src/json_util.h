// Copyright 2026 The Accredit Authors
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

#ifndef ACCREDIT_SRC_JSON_UTIL_H
#define ACCREDIT_SRC_JSON_UTIL_H

#include <complex>

#include <Eigen/Dense>

#include "accredit/circuit.h"
#include <nlohmann/json.hpp>

namespace accredit::detail {

using nlohmann::json;

json complex_to_json(std::complex<double> z);
std::complex<double> complex_from_json(const json &j);

json matrix_to_json(const Eigen::MatrixXcd &m);
Eigen::MatrixXcd matrix_from_json(const json &j);

json circuit_to_json(const Circuit &c);
Circuit circuit_from_json(const json &j);

json redacted_to_json(const RedactedCircuit &skeleton);
RedactedCircuit redacted_from_json(const json &j);

}  // namespace accredit::detail

#endif
