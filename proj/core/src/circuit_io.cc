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

#include "accredit/circuit_io.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json_util.h"

namespace accredit {

namespace detail {

json complex_to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const json &j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::invalid_argument("complex numbers are [re, im] pairs.");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

json matrix_to_json(const Eigen::MatrixXcd &m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            row.push_back(complex_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXcd matrix_from_json(const json &j) {
    if (!j.is_array() || j.empty()) {
        throw std::invalid_argument("matrices are non-empty arrays of rows.");
    }
    auto rows = static_cast<Eigen::Index>(j.size());
    auto cols = static_cast<Eigen::Index>(j[0].size());
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index r = 0; r < rows; r++) {
        const auto &row = j[static_cast<std::size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw std::invalid_argument("matrix rows must all have the same length.");
        }
        for (Eigen::Index c = 0; c < cols; c++) {
            m(r, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
        }
    }
    return m;
}

namespace {

json slot_to_json(const SlotGate &slot) {
    if (slot.name == GateName::CUSTOM) {
        return json{{"u", matrix_to_json(slot.matrix)}};
    }
    return std::string(gate_name_str(slot.name));
}

SlotGate slot_from_json(const json &j) {
    if (j.is_string()) {
        return SlotGate::named(parse_gate_name(j.get<std::string>()));
    }
    if (j.is_object() && j.contains("u")) {
        Eigen::MatrixXcd m = matrix_from_json(j.at("u"));
        if (m.rows() != 2 || m.cols() != 2) {
            throw std::invalid_argument("custom single-qubit gates must be 2x2.");
        }
        // Kept verbatim (not re-recognised) so round trips are exact.
        return SlotGate{GateName::CUSTOM, m};
    }
    throw std::invalid_argument("single-qubit gates are names or {\"u\": matrix}.");
}

json multi_to_json(const MultiQubitLayer &layer) {
    json gates = json::array();
    for (const auto &g : layer.gates) {
        gates.push_back({{"gate", g.kind == TwoQubitKind::CZ ? "CZ" : "CNOT"}, {"qubits", {g.q0, g.q1}}});
    }
    return json{{"type", "multi"}, {"gates", std::move(gates)}};
}

MultiQubitLayer multi_from_json(const json &j) {
    MultiQubitLayer layer;
    for (const auto &g : j.at("gates")) {
        auto name = g.at("gate").get<std::string>();
        TwoQubitGate gate;
        if (name == "CZ") {
            gate.kind = TwoQubitKind::CZ;
        } else if (name == "CNOT" || name == "CX") {
            gate.kind = TwoQubitKind::CNOT;
        } else {
            throw std::invalid_argument("Unknown two-qubit gate '" + name + "'.");
        }
        const auto &qubits = g.at("qubits");
        if (!qubits.is_array() || qubits.size() != 2) {
            throw std::invalid_argument("two-qubit gates need exactly two qubits.");
        }
        gate.q0 = qubits[0].get<std::uint32_t>();
        gate.q1 = qubits[1].get<std::uint32_t>();
        layer.gates.push_back(gate);
    }
    return layer;
}

}  // namespace

json circuit_to_json(const Circuit &c) {
    json layers = json::array();
    for (const auto &layer : c.layers) {
        if (const auto *single = std::get_if<SingleQubitLayer>(&layer)) {
            json gates = json::array();
            for (const auto &slot : single->slots) {
                gates.push_back(slot_to_json(slot));
            }
            layers.push_back({{"type", "single"}, {"gates", std::move(gates)}});
        } else {
            layers.push_back(multi_to_json(std::get<MultiQubitLayer>(layer)));
        }
    }
    return json{{"n_qubits", c.num_qubits}, {"layers", std::move(layers)}, {"measure_all", c.measure_all}};
}

Circuit circuit_from_json(const json &j) {
    Circuit c;
    c.num_qubits = j.at("n_qubits").get<std::size_t>();
    c.measure_all = j.value("measure_all", true);
    for (const auto &layer : j.at("layers")) {
        auto type = layer.at("type").get<std::string>();
        if (type == "single") {
            SingleQubitLayer single;
            for (const auto &g : layer.at("gates")) {
                single.slots.push_back(slot_from_json(g));
            }
            c.layers.emplace_back(std::move(single));
        } else if (type == "multi") {
            c.layers.emplace_back(multi_from_json(layer));
        } else {
            throw std::invalid_argument("layer type must be \"single\" or \"multi\", got '" + type + "'.");
        }
    }
    return validate_circuit(std::move(c));
}

json redacted_to_json(const RedactedCircuit &skeleton) {
    json layers = json::array();
    for (const auto &layer : skeleton.layers) {
        if (const auto *opaque = std::get_if<OpaqueLayer>(&layer)) {
            layers.push_back({{"type", "single"}, {"slots", opaque->num_slots}});
        } else {
            layers.push_back(multi_to_json(std::get<MultiQubitLayer>(layer)));
        }
    }
    return json{{"n_qubits", skeleton.num_qubits}, {"layers", std::move(layers)}, {"measure_all", skeleton.measure_all}};
}

RedactedCircuit redacted_from_json(const json &j) {
    RedactedCircuit skeleton;
    skeleton.num_qubits = j.at("n_qubits").get<std::size_t>();
    skeleton.measure_all = j.value("measure_all", true);
    for (const auto &layer : j.at("layers")) {
        if (layer.at("type").get<std::string>() == "single") {
            skeleton.layers.emplace_back(OpaqueLayer{layer.at("slots").get<std::size_t>()});
        } else {
            skeleton.layers.emplace_back(multi_from_json(layer));
        }
    }
    return skeleton;
}

}  // namespace detail

Circuit parse_circuit(std::string_view text) {
    try {
        return detail::circuit_from_json(detail::json::parse(text));
    } catch (const detail::json::exception &e) {
        throw std::invalid_argument(std::string("malformed circuit: ") + e.what());
    }
}

std::string serialize_circuit(const Circuit &c) { return detail::circuit_to_json(c).dump(2); }

Circuit load_circuit_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open circuit file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_circuit(buffer.str());
}

std::string serialize_redacted(const RedactedCircuit &skeleton) {
    return detail::redacted_to_json(skeleton).dump(2);
}

RedactedCircuit parse_redacted(std::string_view text) {
    try {
        return detail::redacted_from_json(detail::json::parse(text));
    } catch (const detail::json::exception &e) {
        throw std::invalid_argument(std::string("malformed redacted circuit: ") + e.what());
    }
}

}  // namespace accredit
