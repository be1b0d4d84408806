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

#ifndef ACCREDIT_CIRCUIT_H
#define ACCREDIT_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace accredit {

/// Widest circuit the library accepts.
constexpr std::size_t kMaxQubits = 14;

enum class GateName : std::uint8_t { I, X, Y, Z, H, S, S_DAG, T, T_DAG, CUSTOM };

std::string_view gate_name_str(GateName name);
GateName parse_gate_name(std::string_view text);

/// The gate occupying one single-qubit slot. Named gates carry their
/// canonical matrix; CUSTOM slots hold a composed 2x2 unitary (used when
/// twirl or hiding gates are folded into an existing slot).
struct SlotGate {
    GateName name = GateName::I;
    Eigen::Matrix2cd matrix = Eigen::Matrix2cd::Identity();

    static SlotGate named(GateName name);
    /// Recognises named gates up to global phase, otherwise CUSTOM.
    static SlotGate from_matrix(const Eigen::Matrix2cd &m);

    bool operator==(const SlotGate &other) const;
};

/// Gate equivalent to applying `first` and then `second`.
SlotGate compose(const SlotGate &first, const SlotGate &second);

enum class TwoQubitKind : std::uint8_t { CZ, CNOT };

/// A two-qubit gate. For CNOT, q0 is the control and q1 the target.
struct TwoQubitGate {
    TwoQubitKind kind = TwoQubitKind::CZ;
    std::uint32_t q0 = 0;
    std::uint32_t q1 = 0;

    bool operator==(const TwoQubitGate &) const = default;
};

struct SingleQubitLayer {
    std::vector<SlotGate> slots;  // one per qubit
    bool operator==(const SingleQubitLayer &) const = default;
};

struct MultiQubitLayer {
    std::vector<TwoQubitGate> gates;
    bool operator==(const MultiQubitLayer &) const = default;
};

using Layer = std::variant<SingleQubitLayer, MultiQubitLayer>;

/// Layered circuit acting on |0...0>, alternating single-qubit and
/// multi-qubit layers and ending with terminal Z-basis measurement of every
/// qubit.
struct Circuit {
    std::size_t num_qubits = 0;
    std::vector<Layer> layers;
    bool measure_all = true;

    std::size_t num_slots() const;
    std::size_t num_two_qubit_gates() const;
    bool operator==(const Circuit &) const = default;
};

/// A single-qubit layer with its gate identities hidden.
struct OpaqueLayer {
    std::size_t num_slots = 0;
    bool operator==(const OpaqueLayer &) const = default;
};

using RedactedLayer = std::variant<OpaqueLayer, MultiQubitLayer>;

struct RedactedCircuit {
    std::size_t num_qubits = 0;
    std::vector<RedactedLayer> layers;
    bool measure_all = true;

    bool operator==(const RedactedCircuit &) const = default;
    std::string str() const;
};

enum class LocationKind : std::uint8_t { STATE_PREP, AFTER_GATE, PRE_MEASUREMENT };

/// A point where a noise channel acts. `layer` is the index of the layer
/// whose gate precedes the location (unused for prep and measurement).
struct ErrorLocation {
    LocationKind kind = LocationKind::STATE_PREP;
    std::size_t layer = 0;
    std::vector<std::uint32_t> qubits;

    int arity() const { return static_cast<int>(qubits.size()); }
    bool operator==(const ErrorLocation &) const = default;
};

/// Checks every structural invariant, throwing std::invalid_argument naming
/// the first violation. Returns the circuit with each multi-qubit layer's
/// gates sorted by lowest qubit.
Circuit validate_circuit(Circuit c);

RedactedCircuit redact_circuit(const Circuit &c);
bool same_redaction_class(const Circuit &a, const Circuit &b);

/// Order: preparation per qubit, then layer by layer (slots by qubit,
/// two-qubit gates in layer order), then measurement per qubit.
std::vector<ErrorLocation> error_locations(const RedactedCircuit &skeleton);
std::vector<ErrorLocation> error_locations(const Circuit &c);

}  // namespace accredit

#endif
