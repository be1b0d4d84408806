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

#include "accredit/circuit.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <sstream>
#include <stdexcept>

namespace accredit {

namespace {

using cd = std::complex<double>;

struct NamedGateInfo {
    GateName name;
    std::string_view text;
};

constexpr std::array<NamedGateInfo, 9> kNamedGates = {{
    {GateName::I, "I"},
    {GateName::X, "X"},
    {GateName::Y, "Y"},
    {GateName::Z, "Z"},
    {GateName::H, "H"},
    {GateName::S, "S"},
    {GateName::S_DAG, "S_DAG"},
    {GateName::T, "T"},
    {GateName::T_DAG, "T_DAG"},
}};

Eigen::Matrix2cd named_matrix(GateName name) {
    const double r = 1.0 / std::sqrt(2.0);
    const cd t_phase = std::polar(1.0, M_PI / 4);
    Eigen::Matrix2cd m;
    switch (name) {
        case GateName::I:
            m << 1, 0, 0, 1;
            break;
        case GateName::X:
            m << 0, 1, 1, 0;
            break;
        case GateName::Y:
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case GateName::Z:
            m << 1, 0, 0, -1;
            break;
        case GateName::H:
            m << r, r, r, -r;
            break;
        case GateName::S:
            m << 1, 0, 0, cd(0, 1);
            break;
        case GateName::S_DAG:
            m << 1, 0, 0, cd(0, -1);
            break;
        case GateName::T:
            m << 1, 0, 0, t_phase;
            break;
        case GateName::T_DAG:
            m << 1, 0, 0, std::conj(t_phase);
            break;
        case GateName::CUSTOM:
            throw std::invalid_argument("CUSTOM has no canonical matrix.");
    }
    return m;
}

// a == phase * b for some unit-modulus phase.
bool equal_up_to_global_phase(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    constexpr double kTol = 1e-9;
    Eigen::Index r = 0;
    Eigen::Index c = 0;
    b.cwiseAbs().maxCoeff(&r, &c);
    if (std::abs(a(r, c)) < kTol) {
        return false;
    }
    cd phase = a(r, c) / b(r, c);
    return (a - phase * b).cwiseAbs().maxCoeff() < kTol;
}

bool is_unitary(const Eigen::Matrix2cd &m) {
    return (m.adjoint() * m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() < 1e-9;
}

std::uint32_t low_qubit(const TwoQubitGate &g) { return std::min(g.q0, g.q1); }

}  // namespace

std::string_view gate_name_str(GateName name) {
    for (const auto &info : kNamedGates) {
        if (info.name == name) {
            return info.text;
        }
    }
    return "U";
}

GateName parse_gate_name(std::string_view text) {
    for (const auto &info : kNamedGates) {
        if (info.text == text) {
            return info.name;
        }
    }
    if (text == "SDG" || text == "S†") {
        return GateName::S_DAG;
    }
    if (text == "TDG" || text == "T†") {
        return GateName::T_DAG;
    }
    throw std::invalid_argument("Unknown single-qubit gate '" + std::string(text) + "'.");
}

SlotGate SlotGate::named(GateName name) { return SlotGate{name, named_matrix(name)}; }

SlotGate SlotGate::from_matrix(const Eigen::Matrix2cd &m) {
    for (const auto &info : kNamedGates) {
        if (equal_up_to_global_phase(m, named_matrix(info.name))) {
            return named(info.name);
        }
    }
    return SlotGate{GateName::CUSTOM, m};
}

bool SlotGate::operator==(const SlotGate &other) const {
    if (name != other.name) {
        return false;
    }
    return name != GateName::CUSTOM || matrix == other.matrix;
}

SlotGate compose(const SlotGate &first, const SlotGate &second) {
    return SlotGate::from_matrix(second.matrix * first.matrix);
}

std::size_t Circuit::num_slots() const {
    std::size_t total = 0;
    for (const auto &layer : layers) {
        if (const auto *single = std::get_if<SingleQubitLayer>(&layer)) {
            total += single->slots.size();
        }
    }
    return total;
}

std::size_t Circuit::num_two_qubit_gates() const {
    std::size_t total = 0;
    for (const auto &layer : layers) {
        if (const auto *multi = std::get_if<MultiQubitLayer>(&layer)) {
            total += multi->gates.size();
        }
    }
    return total;
}

Circuit validate_circuit(Circuit c) {
    if (c.num_qubits == 0 || c.num_qubits > kMaxQubits) {
        throw std::invalid_argument(
            "qubit count out of range: " + std::to_string(c.num_qubits) + " (allowed 1.." +
            std::to_string(kMaxQubits) + ").");
    }
    if (!c.measure_all) {
        throw std::invalid_argument("only terminal measurement of all qubits is supported.");
    }
    if (!c.layers.empty() && !std::holds_alternative<SingleQubitLayer>(c.layers.back())) {
        throw std::invalid_argument("the last layer must be a single-qubit layer.");
    }
    for (std::size_t k = 0; k < c.layers.size(); k++) {
        bool expect_single = k % 2 == 0;
        auto &layer = c.layers[k];
        if (std::holds_alternative<SingleQubitLayer>(layer) != expect_single) {
            throw std::invalid_argument(
                "layers must alternate single/multi starting with single (layer " +
                std::to_string(k) + ").");
        }
        if (auto *single = std::get_if<SingleQubitLayer>(&layer)) {
            if (single->slots.size() != c.num_qubits) {
                throw std::invalid_argument(
                    "missing slot: layer " + std::to_string(k) + " has " +
                    std::to_string(single->slots.size()) + " gates for " +
                    std::to_string(c.num_qubits) + " qubits.");
            }
            for (const auto &slot : single->slots) {
                if (slot.name == GateName::CUSTOM && !is_unitary(slot.matrix)) {
                    throw std::invalid_argument(
                        "non-unitary custom gate in layer " + std::to_string(k) + ".");
                }
            }
            continue;
        }
        auto &multi = std::get<MultiQubitLayer>(layer);
        std::uint32_t used = 0;
        for (const auto &g : multi.gates) {
            if (g.q0 >= c.num_qubits || g.q1 >= c.num_qubits) {
                throw std::invalid_argument(
                    "two-qubit gate on qubit out of range in layer " + std::to_string(k) + ".");
            }
            if (g.q0 == g.q1) {
                throw std::invalid_argument(
                    "two-qubit gate acting twice on qubit " + std::to_string(g.q0) + ".");
            }
            std::uint32_t mask = (std::uint32_t{1} << g.q0) | (std::uint32_t{1} << g.q1);
            if (used & mask) {
                throw std::invalid_argument(
                    "overlapping multi-qubit gates in layer " + std::to_string(k) + ".");
            }
            used |= mask;
        }
        std::sort(multi.gates.begin(), multi.gates.end(),
                  [](const TwoQubitGate &a, const TwoQubitGate &b) { return low_qubit(a) < low_qubit(b); });
    }
    return c;
}

RedactedCircuit redact_circuit(const Circuit &c) {
    RedactedCircuit out;
    out.num_qubits = c.num_qubits;
    out.measure_all = c.measure_all;
    out.layers.reserve(c.layers.size());
    for (const auto &layer : c.layers) {
        if (const auto *single = std::get_if<SingleQubitLayer>(&layer)) {
            out.layers.emplace_back(OpaqueLayer{single->slots.size()});
        } else {
            out.layers.emplace_back(std::get<MultiQubitLayer>(layer));
        }
    }
    return out;
}

bool same_redaction_class(const Circuit &a, const Circuit &b) {
    return redact_circuit(a) == redact_circuit(b);
}

std::string RedactedCircuit::str() const {
    std::ostringstream out;
    out << "qubits=" << num_qubits;
    for (const auto &layer : layers) {
        if (const auto *opaque = std::get_if<OpaqueLayer>(&layer)) {
            out << " [" << std::string(opaque->num_slots, '?') << "]";
            continue;
        }
        out << " {";
        for (const auto &g : std::get<MultiQubitLayer>(layer).gates) {
            out << (g.kind == TwoQubitKind::CZ ? " CZ " : " CNOT ") << g.q0 << "," << g.q1;
        }
        out << " }";
    }
    out << " M";
    return out.str();
}

std::vector<ErrorLocation> error_locations(const RedactedCircuit &skeleton) {
    std::vector<ErrorLocation> out;
    for (std::uint32_t q = 0; q < skeleton.num_qubits; q++) {
        out.push_back({LocationKind::STATE_PREP, 0, {q}});
    }
    for (std::size_t k = 0; k < skeleton.layers.size(); k++) {
        const auto &layer = skeleton.layers[k];
        if (const auto *opaque = std::get_if<OpaqueLayer>(&layer)) {
            for (std::uint32_t q = 0; q < opaque->num_slots; q++) {
                out.push_back({LocationKind::AFTER_GATE, k, {q}});
            }
        } else {
            for (const auto &g : std::get<MultiQubitLayer>(layer).gates) {
                out.push_back({LocationKind::AFTER_GATE, k, {g.q0, g.q1}});
            }
        }
    }
    for (std::uint32_t q = 0; q < skeleton.num_qubits; q++) {
        out.push_back({LocationKind::PRE_MEASUREMENT, skeleton.layers.size(), {q}});
    }
    return out;
}

std::vector<ErrorLocation> error_locations(const Circuit &c) { return error_locations(redact_circuit(c)); }

}  // namespace accredit
