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

#ifndef ACCREDIT_TRAP_FACTORY_H
#define ACCREDIT_TRAP_FACTORY_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "accredit/bit_string.h"
#include "accredit/circuit.h"
#include "accredit/rng.h"

namespace accredit {

/// One-time pad over measurement outcomes, one bit per qubit.
using OutputKey = BitString;

/// A circuit ready for execution plus the Alice-side key that decrypts its
/// outcome.
struct GeneratedCircuit {
    Circuit circuit;
    OutputKey key;
    bool is_target = false;
};

/// The compiled target: c with a random Pauli frame folded into its slots
/// (leaving the noiseless distribution unchanged) and X flips for each set
/// key bit folded into the final slots.
GeneratedCircuit generate_target(const Circuit &c, std::uint64_t seed);
GeneratedCircuit generate_target(const Circuit &c, Rng &rng);

/// A trap in c's redaction class that noiselessly outputs trap_output()
/// before decryption. Each two-qubit gate sees a random product of Z- and
/// X-basis eigenstates it leaves invariant, so both bit and phase faults
/// become visible with constant probability.
GeneratedCircuit generate_trap(const Circuit &c, std::uint64_t seed);
GeneratedCircuit generate_trap(const Circuit &c, Rng &rng);

/// The errorless trap outcome m (all zeros).
BitString trap_output(std::size_t num_qubits);

/// Bitwise XOR; throws std::invalid_argument on a length mismatch.
BitString decrypt_outputs(const BitString &outcome, const OutputKey &key);

/// Pauli faults that act as identity on every circuit of the class: Z
/// components at state preparation, after the final single-qubit layer and
/// before measurement. No trap can detect these and none changes an output.
bool is_trivial_fault(const RedactedCircuit &skeleton, const ErrorLocation &location, std::size_t pauli);

using TrapGenerator = std::function<GeneratedCircuit(const Circuit &, std::uint64_t)>;

struct DetectionOptions {
    /// Independent trap draws averaged over.
    std::size_t samples = 1000;
    /// Random multi-location fault patterns evaluated as a diagnostic.
    std::size_t multi_fault_patterns = 64;
    std::uint64_t seed = 0;
};

struct DetectionReport {
    /// Minimum detection probability over non-trivial single faults.
    double k = 0;
    /// rates[location][pauli]; -1 for the identity and trivial faults.
    std::vector<std::vector<double>> rates;
    std::size_t worst_location = 0;
    std::size_t worst_pauli = 0;
    double multi_fault_min = 1;
    double multi_fault_mean = 1;
    std::size_t samples = 0;
};

/// Injects every non-trivial single Pauli fault into `samples` freshly
/// generated traps and reports the per-fault detection frequency; k is the
/// smallest. Detection means the decrypted outcome differs from m.
DetectionReport estimate_detection_rate(const Circuit &c, const DetectionOptions &options = {},
                                        const TrapGenerator &generator = {});

}  // namespace accredit

#endif
