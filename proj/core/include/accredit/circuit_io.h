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

#ifndef ACCREDIT_CIRCUIT_IO_H
#define ACCREDIT_CIRCUIT_IO_H

#include <filesystem>
#include <string>
#include <string_view>

#include "accredit/circuit.h"

namespace accredit {

// Circuit files are JSON:
//
//   {
//     "n_qubits": 2,
//     "layers": [
//       {"type": "single", "gates": ["H", "I"]},
//       {"type": "multi",  "gates": [{"gate": "CNOT", "qubits": [0, 1]}]},
//       {"type": "single", "gates": ["T", {"u": [[[1,0],[0,0]],[[0,0],[0,1]]]}]}
//     ],
//     "measure_all": true
//   }
//
// Single-qubit gates are names from {I, X, Y, Z, H, S, S_DAG, T, T_DAG} or a
// composed unitary {"u": rows of [re, im] pairs}. CNOT lists control first.
// Parsing validates the circuit.

Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit &c);
Circuit load_circuit_file(const std::filesystem::path &path);

/// Redacted skeletons replace each single-qubit layer's gate list with
/// {"type": "single", "slots": n}.
std::string serialize_redacted(const RedactedCircuit &skeleton);
RedactedCircuit parse_redacted(std::string_view text);

}  // namespace accredit

#endif
