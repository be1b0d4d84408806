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

#include "accredit/trap_factory.h"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "accredit/pauli.h"
#include "accredit/simulator.h"

namespace accredit {

namespace {

enum Basis : std::uint8_t { Z_BASIS = 0, X_BASIS = 1 };

const Eigen::Matrix2cd &hadamard() {
    static const Eigen::Matrix2cd h = SlotGate::named(GateName::H).matrix;
    return h;
}

Pauli random_pauli(Rng &rng) {
    return static_cast<Pauli>(std::uniform_int_distribution<int>(0, 3)(rng));
}

// Random twirl Paulis placed before each multi-qubit layer, and their images
// after it. frames[j] belongs to the j-th multi-qubit layer.
struct TwirlFrames {
    std::vector<PauliFrame> before;
    std::vector<PauliFrame> after;
};

std::vector<const MultiQubitLayer *> multi_layers(const Circuit &c) {
    std::vector<const MultiQubitLayer *> out;
    for (const auto &layer : c.layers) {
        if (const auto *multi = std::get_if<MultiQubitLayer>(&layer)) {
            out.push_back(multi);
        }
    }
    return out;
}

TwirlFrames draw_twirl(const Circuit &c, const std::vector<const MultiQubitLayer *> &layers, Rng &rng) {
    TwirlFrames frames;
    for (const auto *layer : layers) {
        PauliFrame before;
        for (std::size_t q = 0; q < c.num_qubits; q++) {
            before.set(q, random_pauli(rng));
        }
        PauliFrame after = before;
        for (const auto &g : layer->gates) {
            if (g.kind == TwoQubitKind::CZ) {
                after.apply_cz(g.q0, g.q1);
            } else {
                after.apply_cnot(g.q0, g.q1);
            }
        }
        frames.before.push_back(before);
        frames.after.push_back(after);
    }
    return frames;
}

// Per qubit, the eigenbasis it sits in while the layer acts. Every pair is
// one the gate leaves invariant: CZ fixes |0>|.> and |.>|0>, CNOT fixes
// |0>|.> and |.>|+>.
std::vector<Basis> draw_bases(std::size_t num_qubits, const MultiQubitLayer &layer, Rng &rng) {
    std::vector<Basis> bases(num_qubits);
    std::uniform_int_distribution<int> coin(0, 1);
    for (auto &b : bases) {
        b = coin(rng) ? X_BASIS : Z_BASIS;
    }
    std::uniform_int_distribution<int> three(0, 2);
    for (const auto &g : layer.gates) {
        static constexpr Basis kCz[3][2] = {{Z_BASIS, Z_BASIS}, {Z_BASIS, X_BASIS}, {X_BASIS, Z_BASIS}};
        static constexpr Basis kCnot[3][2] = {{Z_BASIS, Z_BASIS}, {Z_BASIS, X_BASIS}, {X_BASIS, X_BASIS}};
        const auto &choice = (g.kind == TwoQubitKind::CZ ? kCz : kCnot)[three(rng)];
        bases[g.q0] = choice[0];
        bases[g.q1] = choice[1];
    }
    return bases;
}

// Builds the generated circuit slot by slot. slot_core(layer, qubit)
// supplies the gate applied between the incoming frame correction and the
// outgoing twirl Pauli.
template <typename SlotCore>
Circuit assemble(const Circuit &c, const TwirlFrames &frames, const OutputKey &key, SlotCore &&slot_core) {
    Circuit out = c;
    std::size_t single_index = 0;
    std::size_t num_single = (c.layers.size() + 1) / 2;
    for (auto &layer : out.layers) {
        auto *single = std::get_if<SingleQubitLayer>(&layer);
        if (single == nullptr) {
            continue;
        }
        bool last = single_index + 1 == num_single;
        for (std::uint32_t q = 0; q < c.num_qubits; q++) {
            Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
            if (single_index > 0) {
                m = pauli_matrix(frames.after[single_index - 1].at(q)) * m;
            }
            m = slot_core(single_index, q) * m;
            if (!last) {
                m = pauli_matrix(frames.before[single_index].at(q)) * m;
            } else if (key[q]) {
                m = pauli_matrix(Pauli::X) * m;
            }
            single->slots[q] = SlotGate::from_matrix(m);
        }
        single_index++;
    }
    return out;
}

}  // namespace

GeneratedCircuit generate_target(const Circuit &c, Rng &rng) {
    Circuit valid = validate_circuit(c);
    auto layers = multi_layers(valid);
    TwirlFrames frames = draw_twirl(valid, layers, rng);
    OutputKey key = BitString::random(valid.num_qubits, rng);
    std::vector<const SingleQubitLayer *> original;
    for (const auto &layer : valid.layers) {
        if (const auto *single = std::get_if<SingleQubitLayer>(&layer)) {
            original.push_back(single);
        }
    }
    Circuit out = assemble(valid, frames, key, [&](std::size_t layer, std::uint32_t q) -> Eigen::Matrix2cd {
        return original[layer]->slots[q].matrix;
    });
    return GeneratedCircuit{std::move(out), key, true};
}

GeneratedCircuit generate_target(const Circuit &c, std::uint64_t seed) {
    Rng rng(seed);
    return generate_target(c, rng);
}

GeneratedCircuit generate_trap(const Circuit &c, Rng &rng) {
    Circuit valid = validate_circuit(c);
    auto layers = multi_layers(valid);
    TwirlFrames frames = draw_twirl(valid, layers, rng);
    std::vector<std::vector<Basis>> bases;
    bases.reserve(layers.size());
    for (const auto *layer : layers) {
        bases.push_back(draw_bases(valid.num_qubits, *layer, rng));
    }
    OutputKey key = BitString::random(valid.num_qubits, rng);
    // Slot i leaves basis b[i-1] (if any) and enters basis b[i] (if any).
    Circuit out = assemble(valid, frames, key, [&](std::size_t slot, std::uint32_t q) -> Eigen::Matrix2cd {
        Eigen::Matrix2cd m = Eigen::Matrix2cd::Identity();
        if (slot > 0 && bases[slot - 1][q] == X_BASIS) {
            m = hadamard() * m;
        }
        if (slot < bases.size() && bases[slot][q] == X_BASIS) {
            m = hadamard() * m;
        }
        return m;
    });
    return GeneratedCircuit{std::move(out), key, false};
}

GeneratedCircuit generate_trap(const Circuit &c, std::uint64_t seed) {
    Rng rng(seed);
    return generate_trap(c, rng);
}

BitString trap_output(std::size_t num_qubits) { return BitString::zeros(num_qubits); }

BitString decrypt_outputs(const BitString &outcome, const OutputKey &key) { return outcome ^ key; }

bool is_trivial_fault(const RedactedCircuit &skeleton, const ErrorLocation &location, std::size_t pauli) {
    if (location.arity() != 1) {
        return false;
    }
    Pauli p = pauli_at(pauli, 0);
    if (p != Pauli::Z && p != Pauli::I) {
        return false;
    }
    switch (location.kind) {
        case LocationKind::STATE_PREP:
        case LocationKind::PRE_MEASUREMENT:
            return true;
        case LocationKind::AFTER_GATE:
            // Only measurement follows the final single-qubit layer.
            return location.layer + 1 == skeleton.layers.size();
    }
    return false;
}

DetectionReport estimate_detection_rate(const Circuit &c, const DetectionOptions &options,
                                        const TrapGenerator &generator) {
    if (options.samples == 0) {
        throw std::invalid_argument("detection estimate needs at least one trap sample.");
    }
    Circuit valid = validate_circuit(c);
    RedactedCircuit skeleton = redact_circuit(valid);
    auto locations = error_locations(skeleton);
    TrapGenerator make = generator ? generator : TrapGenerator([](const Circuit &x, std::uint64_t seed) {
        return generate_trap(x, seed);
    });

    // Fixed multi-fault patterns, each with at least two non-trivial faults.
    std::vector<std::vector<std::uint8_t>> patterns;
    {
        Rng rng(derive_seed(options.seed, 0xFA017));
        std::size_t attempts = 0;
        while (patterns.size() < options.multi_fault_patterns && attempts++ < 100 * options.multi_fault_patterns + 100) {
            std::vector<std::uint8_t> pattern(locations.size(), 0);
            std::size_t nontrivial = 0;
            double rate = std::min(0.5, 3.0 / static_cast<double>(locations.size()));
            for (std::size_t l = 0; l < locations.size(); l++) {
                if (std::uniform_real_distribution<double>(0, 1)(rng) >= rate) {
                    continue;
                }
                auto n = num_pauli_strings(locations[l].arity());
                auto p = static_cast<std::uint8_t>(std::uniform_int_distribution<std::size_t>(1, n - 1)(rng));
                pattern[l] = p;
                nontrivial += is_trivial_fault(skeleton, locations[l], p) ? 0 : 1;
            }
            if (nontrivial >= 2) {
                patterns.push_back(std::move(pattern));
            }
        }
    }

    std::vector<std::vector<double>> hits(locations.size());
    for (std::size_t l = 0; l < locations.size(); l++) {
        hits[l].assign(num_pauli_strings(locations[l].arity()), 0.0);
    }
    std::vector<double> pattern_hits(patterns.size(), 0.0);

    for (std::size_t s = 0; s < options.samples; s++) {
        GeneratedCircuit trap = make(valid, derive_seed(options.seed, s));
        if (!same_redaction_class(trap.circuit, valid)) {
            throw std::invalid_argument("trap generator left the redaction class.");
        }
        std::optional<CliffordPropagator> clifford;
        try {
            clifford.emplace(trap.circuit);
        } catch (const std::invalid_argument &) {
        }
        // Probability that the decrypted outcome is not m under `pattern`.
        auto detection = [&](std::span<const std::uint8_t> pattern) -> double {
            if (clifford) {
                return clifford->propagate(pattern).x != 0 ? 1.0 : 0.0;
            }
            return 1.0 - faulted_distribution(trap.circuit, pattern).probability(trap.key);
        };
        std::vector<std::uint8_t> single(locations.size(), 0);
        for (std::size_t l = 0; l < locations.size(); l++) {
            for (std::size_t p = 1; p < hits[l].size(); p++) {
                if (is_trivial_fault(skeleton, locations[l], p)) {
                    continue;
                }
                double d;
                if (clifford) {
                    d = clifford->propagate_single(l, static_cast<std::uint8_t>(p)).x != 0 ? 1.0 : 0.0;
                } else {
                    single[l] = static_cast<std::uint8_t>(p);
                    d = detection(single);
                    single[l] = 0;
                }
                hits[l][p] += d;
            }
        }
        for (std::size_t k = 0; k < patterns.size(); k++) {
            pattern_hits[k] += detection(patterns[k]);
        }
    }

    DetectionReport report;
    report.samples = options.samples;
    report.k = 1;
    bool any = false;
    report.rates.resize(locations.size());
    double n = static_cast<double>(options.samples);
    for (std::size_t l = 0; l < locations.size(); l++) {
        report.rates[l].assign(hits[l].size(), -1.0);
        for (std::size_t p = 1; p < hits[l].size(); p++) {
            if (is_trivial_fault(skeleton, locations[l], p)) {
                continue;
            }
            double rate = hits[l][p] / n;
            report.rates[l][p] = rate;
            if (!any || rate < report.k) {
                report.k = rate;
                report.worst_location = l;
                report.worst_pauli = p;
                any = true;
            }
        }
    }
    if (!patterns.empty()) {
        double total = 0;
        report.multi_fault_min = 1;
        for (auto h : pattern_hits) {
            double rate = h / n;
            report.multi_fault_min = std::min(report.multi_fault_min, rate);
            total += rate;
        }
        report.multi_fault_mean = total / static_cast<double>(patterns.size());
    }
    return report;
}

}  // namespace accredit
