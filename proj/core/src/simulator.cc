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

#include "accredit/simulator.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace accredit {

namespace {

using cd = std::complex<double>;
using Amplitudes = std::vector<cd>;

void apply_1q(Amplitudes &v, std::size_t q, const Eigen::Matrix2cd &u) {
    std::size_t bit = std::size_t{1} << q;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (i & bit) {
            continue;
        }
        cd a = v[i];
        cd b = v[i | bit];
        v[i] = u(0, 0) * a + u(0, 1) * b;
        v[i | bit] = u(1, 0) * a + u(1, 1) * b;
    }
}

// Local basis index is bit(a) + 2 * bit(b).
void apply_2q(Amplitudes &v, std::size_t a, std::size_t b, const Eigen::Matrix4cd &m) {
    std::size_t bit_a = std::size_t{1} << a;
    std::size_t bit_b = std::size_t{1} << b;
    for (std::size_t i = 0; i < v.size(); i++) {
        if (i & (bit_a | bit_b)) {
            continue;
        }
        std::size_t idx[4] = {i, i | bit_a, i | bit_b, i | bit_a | bit_b};
        cd in[4] = {v[idx[0]], v[idx[1]], v[idx[2]], v[idx[3]]};
        for (int r = 0; r < 4; r++) {
            v[idx[r]] = m(r, 0) * in[0] + m(r, 1) * in[1] + m(r, 2) * in[2] + m(r, 3) * in[3];
        }
    }
}

void apply_cz(Amplitudes &v, std::size_t a, std::size_t b) {
    std::size_t mask = (std::size_t{1} << a) | (std::size_t{1} << b);
    for (std::size_t i = 0; i < v.size(); i++) {
        if ((i & mask) == mask) {
            v[i] = -v[i];
        }
    }
}

void apply_cnot(Amplitudes &v, std::size_t control, std::size_t target) {
    std::size_t cbit = std::size_t{1} << control;
    std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < v.size(); i++) {
        if ((i & cbit) && !(i & tbit)) {
            std::swap(v[i], v[i | tbit]);
        }
    }
}

void apply_pauli(Amplitudes &v, std::size_t q, Pauli p) {
    if (p != Pauli::I) {
        apply_1q(v, q, pauli_matrix(p));
    }
}

void apply_two_qubit_gate(Amplitudes &v, const TwoQubitGate &g, std::size_t offset) {
    if (g.kind == TwoQubitKind::CZ) {
        apply_cz(v, g.q0 + offset, g.q1 + offset);
    } else {
        apply_cnot(v, g.q0 + offset, g.q1 + offset);
    }
}

// Visits the circuit in execution order. on_location receives the index
// into error_locations() order and the location's qubits.
template <typename OnSlot, typename OnTwoQubit, typename OnLocation>
void walk_circuit(const Circuit &c, OnSlot &&on_slot, OnTwoQubit &&on_two_qubit, OnLocation &&on_location) {
    std::size_t loc = 0;
    for (std::uint32_t q = 0; q < c.num_qubits; q++) {
        on_location(loc++, std::span<const std::uint32_t>(&q, 1));
    }
    for (const auto &layer : c.layers) {
        if (const auto *single = std::get_if<SingleQubitLayer>(&layer)) {
            for (std::uint32_t q = 0; q < single->slots.size(); q++) {
                on_slot(q, single->slots[q]);
                on_location(loc++, std::span<const std::uint32_t>(&q, 1));
            }
        } else {
            for (const auto &g : std::get<MultiQubitLayer>(layer).gates) {
                on_two_qubit(g);
                std::uint32_t qubits[2] = {g.q0, g.q1};
                on_location(loc++, std::span<const std::uint32_t>(qubits, 2));
            }
        }
    }
    for (std::uint32_t q = 0; q < c.num_qubits; q++) {
        on_location(loc++, std::span<const std::uint32_t>(&q, 1));
    }
}

Amplitudes zero_state(std::size_t num_qubits) {
    Amplitudes v(std::size_t{1} << num_qubits, cd(0, 0));
    v[0] = 1;
    return v;
}

std::uint8_t draw_pauli(const PauliChannel &ch, Rng &rng) {
    double u = std::uniform_real_distribution<double>(0, 1)(rng);
    double acc = 0;
    for (std::size_t k = 0; k < ch.probs.size(); k++) {
        acc += ch.probs[k];
        if (u < acc) {
            return static_cast<std::uint8_t>(k);
        }
    }
    // Round-off leaves u >= acc; fall back to the last nonzero entry.
    for (std::size_t k = ch.probs.size(); k-- > 0;) {
        if (ch.probs[k] > 0) {
            return static_cast<std::uint8_t>(k);
        }
    }
    return 0;
}

void apply_pauli_string(Amplitudes &v, std::span<const std::uint32_t> qubits, std::size_t index) {
    for (std::size_t k = 0; k < qubits.size(); k++) {
        apply_pauli(v, qubits[k], pauli_at(index, static_cast<int>(k)));
    }
}

std::vector<PauliChannel> twirl_all(const CptpList &list) {
    std::vector<PauliChannel> out;
    out.reserve(list.size());
    for (const auto &ch : list.channels) {
        out.push_back(pauli_twirl(ch));
    }
    return out;
}

void require_fit(const CptpList &list, const std::vector<ErrorLocation> &locations) {
    if (!fits(list, locations)) {
        throw std::invalid_argument(
            "CPTP list does not fit the circuit: " + std::to_string(list.size()) + " channels for " +
            std::to_string(locations.size()) + " error locations or an arity mismatch.");
    }
}

void require_width(const Circuit &c) {
    if (c.num_qubits == 0 || c.num_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count out of range: " + std::to_string(c.num_qubits) + ".");
    }
}

BitString sample_outcome(const Amplitudes &v, std::size_t num_qubits, Rng &rng) {
    double u = std::uniform_real_distribution<double>(0, 1)(rng);
    double acc = 0;
    std::size_t last_nonzero = 0;
    for (std::size_t i = 0; i < v.size(); i++) {
        double p = std::norm(v[i]);
        if (p > 0) {
            last_nonzero = i;
        }
        acc += p;
        if (u < acc) {
            return BitString(num_qubits, static_cast<std::uint32_t>(i));
        }
    }
    return BitString(num_qubits, static_cast<std::uint32_t>(last_nonzero));
}

std::vector<double> probabilities(const Amplitudes &v) {
    std::vector<double> out(v.size());
    for (std::size_t i = 0; i < v.size(); i++) {
        out[i] = std::norm(v[i]);
    }
    return out;
}

// Kraus operators realising one location's noise under `mode`.
std::vector<Eigen::MatrixXcd> location_kraus(const NoiseChannel &ch, NoiseMode mode) {
    if (mode == NoiseMode::KRAUS) {
        if (!validate_channel(ch)) {
            throw std::invalid_argument("CPTP list contains a channel that is not trace preserving.");
        }
        return ch.kraus;
    }
    PauliChannel twirled = pauli_twirl(ch);
    std::vector<Eigen::MatrixXcd> out;
    for (std::size_t k = 0; k < twirled.probs.size(); k++) {
        if (twirled.probs[k] > 0) {
            out.push_back(std::sqrt(twirled.probs[k]) * pauli_string_matrix(k, ch.arity));
        }
    }
    return out;
}

// Density matrix stored as a 2n-qubit vector: row qubit q is bit q and
// column qubit q is bit n + q, so rho -> U rho U^dagger is U on the row
// bits and conj(U) on the column bits.
OutputDistribution exact_noisy_distribution(const Circuit &c, const CptpList &list, NoiseMode mode) {
    std::size_t n = c.num_qubits;
    Amplitudes rho = zero_state(2 * n);
    std::vector<std::vector<Eigen::MatrixXcd>> kraus;
    kraus.reserve(list.size());
    for (const auto &ch : list.channels) {
        kraus.push_back(location_kraus(ch, mode));
    }
    walk_circuit(
        c,
        [&](std::uint32_t q, const SlotGate &g) {
            apply_1q(rho, q, g.matrix);
            apply_1q(rho, q + n, g.matrix.conjugate());
        },
        [&](const TwoQubitGate &g) {
            apply_two_qubit_gate(rho, g, 0);
            apply_two_qubit_gate(rho, g, n);
        },
        [&](std::size_t loc, std::span<const std::uint32_t> qubits) {
            const auto &ops = kraus[loc];
            if (ops.size() == 1 && (ops[0] - Eigen::MatrixXcd::Identity(ops[0].rows(), ops[0].cols()))
                                           .cwiseAbs()
                                           .maxCoeff() < 1e-15) {
                return;
            }
            Amplitudes total(rho.size(), cd(0, 0));
            for (const auto &k : ops) {
                Amplitudes term = rho;
                if (qubits.size() == 1) {
                    Eigen::Matrix2cd m = k;
                    apply_1q(term, qubits[0], m);
                    apply_1q(term, qubits[0] + n, m.conjugate());
                } else {
                    Eigen::Matrix4cd m = k;
                    apply_2q(term, qubits[0], qubits[1], m);
                    apply_2q(term, qubits[0] + n, qubits[1] + n, m.conjugate());
                }
                for (std::size_t i = 0; i < total.size(); i++) {
                    total[i] += term[i];
                }
            }
            rho = std::move(total);
        });
    std::size_t dim = std::size_t{1} << n;
    std::vector<double> probs(dim);
    for (std::size_t r = 0; r < dim; r++) {
        probs[r] = std::max(0.0, rho[r + (r << n)].real());
    }
    return OutputDistribution(n, std::move(probs));
}

OutputDistribution trajectory_distribution(const Circuit &c, const CptpList &list, const SimulationOptions &options) {
    if (options.mode == NoiseMode::KRAUS) {
        throw std::invalid_argument(
            "raw Kraus evolution is only available up to " + std::to_string(kMaxExactQubits) + " qubits.");
    }
    if (options.trajectories == 0) {
        throw std::invalid_argument("trajectory averaging needs at least one trajectory.");
    }
    auto twirled = twirl_all(list);
    Rng rng(options.seed);
    std::vector<double> acc(std::size_t{1} << c.num_qubits, 0.0);
    for (std::size_t t = 0; t < options.trajectories; t++) {
        Amplitudes v = zero_state(c.num_qubits);
        walk_circuit(
            c, [&](std::uint32_t q, const SlotGate &g) { apply_1q(v, q, g.matrix); },
            [&](const TwoQubitGate &g) { apply_two_qubit_gate(v, g, 0); },
            [&](std::size_t loc, std::span<const std::uint32_t> qubits) {
                apply_pauli_string(v, qubits, draw_pauli(twirled[loc], rng));
            });
        for (std::size_t i = 0; i < v.size(); i++) {
            acc[i] += std::norm(v[i]);
        }
    }
    for (auto &p : acc) {
        p /= static_cast<double>(options.trajectories);
    }
    return OutputDistribution(c.num_qubits, std::move(acc));
}

}  // namespace

OutputDistribution::OutputDistribution(std::size_t num_qubits, std::vector<double> probs)
    : num_qubits_(num_qubits), probs_(std::move(probs)) {
    if (probs_.size() != (std::size_t{1} << num_qubits_)) {
        throw std::invalid_argument("distribution must have 2^n entries.");
    }
}

double OutputDistribution::probability(const BitString &outcome) const {
    if (outcome.size() != num_qubits_) {
        throw std::invalid_argument("outcome length does not match the distribution.");
    }
    return probs_[outcome.bits()];
}

double OutputDistribution::total() const {
    double t = 0;
    for (double p : probs_) {
        t += p;
    }
    return t;
}

ExecutionRecord sample_execution(const Circuit &c, std::span<const PauliChannel> twirled, Rng &rng) {
    require_width(c);
    Amplitudes v = zero_state(c.num_qubits);
    ExecutionRecord record;
    record.fault_pattern.reserve(twirled.size());
    walk_circuit(
        c, [&](std::uint32_t q, const SlotGate &g) { apply_1q(v, q, g.matrix); },
        [&](const TwoQubitGate &g) { apply_two_qubit_gate(v, g, 0); },
        [&](std::size_t loc, std::span<const std::uint32_t> qubits) {
            if (loc >= twirled.size() || twirled[loc].arity != static_cast<int>(qubits.size())) {
                throw std::invalid_argument("twirled channels do not fit the circuit.");
            }
            std::uint8_t drawn = draw_pauli(twirled[loc], rng);
            record.fault_pattern.push_back(drawn);
            apply_pauli_string(v, qubits, drawn);
        });
    if (record.fault_pattern.size() != twirled.size()) {
        throw std::invalid_argument("twirled channels do not fit the circuit.");
    }
    record.outcome = sample_outcome(v, c.num_qubits, rng);
    return record;
}

ExecutionRecord sample_execution(const Circuit &c, const CptpList &list, std::uint64_t seed) {
    require_fit(list, error_locations(c));
    auto twirled = twirl_all(list);
    Rng rng(seed);
    return sample_execution(c, twirled, rng);
}

OutputDistribution output_distribution(const Circuit &c) {
    require_width(c);
    Amplitudes v = zero_state(c.num_qubits);
    walk_circuit(
        c, [&](std::uint32_t q, const SlotGate &g) { apply_1q(v, q, g.matrix); },
        [&](const TwoQubitGate &g) { apply_two_qubit_gate(v, g, 0); },
        [](std::size_t, std::span<const std::uint32_t>) {});
    return OutputDistribution(c.num_qubits, probabilities(v));
}

OutputDistribution output_distribution(const Circuit &c, const CptpList &list, const SimulationOptions &options) {
    require_width(c);
    require_fit(list, error_locations(c));
    if (c.num_qubits <= kMaxExactQubits) {
        return exact_noisy_distribution(c, list, options.mode);
    }
    return trajectory_distribution(c, list, options);
}

OutputDistribution faulted_distribution(const Circuit &c, std::span<const std::uint8_t> fault_pattern) {
    require_width(c);
    if (fault_pattern.size() != error_locations(c).size()) {
        throw std::invalid_argument("fault pattern length must equal the number of error locations.");
    }
    Amplitudes v = zero_state(c.num_qubits);
    walk_circuit(
        c, [&](std::uint32_t q, const SlotGate &g) { apply_1q(v, q, g.matrix); },
        [&](const TwoQubitGate &g) { apply_two_qubit_gate(v, g, 0); },
        [&](std::size_t loc, std::span<const std::uint32_t> qubits) {
            apply_pauli_string(v, qubits, fault_pattern[loc]);
        });
    return OutputDistribution(c.num_qubits, probabilities(v));
}

double variation_distance(const OutputDistribution &p, const OutputDistribution &q) {
    if (p.num_qubits() != q.num_qubits()) {
        throw std::invalid_argument("variation distance between distributions on different qubit counts.");
    }
    double total = 0;
    for (std::size_t i = 0; i < p.probs().size(); i++) {
        total += std::abs(p.probs()[i] - q.probs()[i]);
    }
    return total / 2;
}

PauliFrame propagate_faults(const Circuit &c, std::span<const std::uint8_t> fault_pattern) {
    if (fault_pattern.size() != error_locations(c).size()) {
        throw std::invalid_argument("fault pattern length must equal the number of error locations.");
    }
    PauliFrame frame;
    walk_circuit(
        c,
        [&](std::uint32_t q, const SlotGate &g) {
            Pauli p = frame.at(q);
            if (p == Pauli::I) {
                return;
            }
            auto image = conjugate_pauli(g.matrix, p);
            if (!image) {
                throw std::invalid_argument("cannot propagate a Pauli fault through a non-Clifford gate.");
            }
            frame.set(q, *image);
        },
        [&](const TwoQubitGate &g) {
            if (g.kind == TwoQubitKind::CZ) {
                frame.apply_cz(g.q0, g.q1);
            } else {
                frame.apply_cnot(g.q0, g.q1);
            }
        },
        [&](std::size_t loc, std::span<const std::uint32_t> qubits) {
            for (std::size_t k = 0; k < qubits.size(); k++) {
                frame.multiply(qubits[k], pauli_at(fault_pattern[loc], static_cast<int>(k)));
            }
        });
    return frame;
}

CliffordPropagator::CliffordPropagator(const Circuit &c) {
    walk_circuit(
        c,
        [&](std::uint32_t q, const SlotGate &g) {
            Op op{Op::Kind::SLOT};
            op.q0 = q;
            for (Pauli p : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
                auto image = conjugate_pauli(g.matrix, p);
                if (!image) {
                    throw std::invalid_argument("CliffordPropagator needs Clifford single-qubit gates.");
                }
                op.image[static_cast<std::size_t>(p)] = *image;
            }
            ops_.push_back(op);
        },
        [&](const TwoQubitGate &g) {
            Op op{g.kind == TwoQubitKind::CZ ? Op::Kind::CZ : Op::Kind::CNOT};
            op.q0 = g.q0;
            op.q1 = g.q1;
            ops_.push_back(op);
        },
        [&](std::size_t loc, std::span<const std::uint32_t> qubits) {
            Op op{Op::Kind::LOCATION};
            op.location = static_cast<std::uint32_t>(loc);
            op.arity = static_cast<std::uint8_t>(qubits.size());
            op.q0 = qubits[0];
            op.q1 = qubits.size() > 1 ? qubits[1] : qubits[0];
            location_ops_.push_back(ops_.size());
            ops_.push_back(op);
        });
}

PauliFrame CliffordPropagator::run(std::size_t start, PauliFrame frame,
                                   std::span<const std::uint8_t> fault_pattern) const {
    for (std::size_t k = start; k < ops_.size(); k++) {
        const Op &op = ops_[k];
        switch (op.kind) {
            case Op::Kind::SLOT: {
                Pauli p = frame.at(op.q0);
                if (p != Pauli::I) {
                    frame.set(op.q0, op.image[static_cast<std::size_t>(p)]);
                }
                break;
            }
            case Op::Kind::CZ:
                frame.apply_cz(op.q0, op.q1);
                break;
            case Op::Kind::CNOT:
                frame.apply_cnot(op.q0, op.q1);
                break;
            case Op::Kind::LOCATION:
                if (!fault_pattern.empty()) {
                    std::uint8_t f = fault_pattern[op.location];
                    frame.multiply(op.q0, pauli_at(f, 0));
                    if (op.arity == 2) {
                        frame.multiply(op.q1, pauli_at(f, 1));
                    }
                }
                break;
        }
    }
    return frame;
}

PauliFrame CliffordPropagator::propagate(std::span<const std::uint8_t> fault_pattern) const {
    if (fault_pattern.size() != location_ops_.size()) {
        throw std::invalid_argument("fault pattern length must equal the number of error locations.");
    }
    return run(0, PauliFrame{}, fault_pattern);
}

PauliFrame CliffordPropagator::propagate_single(std::size_t location, std::uint8_t pauli) const {
    const Op &op = ops_.at(location_ops_.at(location));
    PauliFrame frame;
    frame.multiply(op.q0, pauli_at(pauli, 0));
    if (op.arity == 2) {
        frame.multiply(op.q1, pauli_at(pauli, 1));
    }
    return run(location_ops_[location] + 1, frame, {});
}

}  // namespace accredit
