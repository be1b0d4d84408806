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

#ifndef ACCREDIT_SIMULATOR_H
#define ACCREDIT_SIMULATOR_H

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "accredit/bit_string.h"
#include "accredit/channel.h"
#include "accredit/circuit.h"
#include "accredit/pauli.h"
#include "accredit/rng.h"

namespace accredit {

/// Widest circuit simulated by density-matrix evolution; wider noisy
/// circuits fall back to trajectory averaging.
constexpr std::size_t kMaxExactQubits = 7;

/// Probabilities of every outcome, indexed by BitString::bits().
class OutputDistribution {
   public:
    OutputDistribution(std::size_t num_qubits, std::vector<double> probs);

    std::size_t num_qubits() const { return num_qubits_; }
    std::span<const double> probs() const { return probs_; }
    double probability(const BitString &outcome) const;
    double total() const;

   private:
    std::size_t num_qubits_;
    std::vector<double> probs_;
};

struct ExecutionRecord {
    BitString outcome;
    /// Pauli string index drawn at each error location. Simulator-private.
    std::vector<std::uint8_t> fault_pattern;
};

enum class NoiseMode {
    /// Apply each location's twirled Pauli channel (what executions sample).
    TWIRLED,
    /// Apply the raw Kraus operators.
    KRAUS,
};

struct SimulationOptions {
    NoiseMode mode = NoiseMode::TWIRLED;
    /// Trajectories averaged above kMaxExactQubits.
    std::size_t trajectories = 4096;
    std::uint64_t seed = 0;
};

/// One noisy run: gates applied ideally, a Pauli drawn from the twirled
/// channel at each location, then every qubit measured.
ExecutionRecord sample_execution(const Circuit &c, const CptpList &list, std::uint64_t seed);
ExecutionRecord sample_execution(const Circuit &c, std::span<const PauliChannel> twirled, Rng &rng);

/// Exact noiseless distribution (statevector).
OutputDistribution output_distribution(const Circuit &c);
/// Noisy distribution; exact up to kMaxExactQubits.
OutputDistribution output_distribution(const Circuit &c, const CptpList &list, const SimulationOptions &options = {});

/// Noiseless distribution with one Pauli string injected at each location.
OutputDistribution faulted_distribution(const Circuit &c, std::span<const std::uint8_t> fault_pattern);

/// Total variation distance. Throws on mismatched qubit counts.
double variation_distance(const OutputDistribution &p, const OutputDistribution &q);

/// Pushes the injected faults through to the end of the circuit, returning
/// the equivalent Pauli applied just before measurement. Requires every
/// slot the frame touches to be Clifford; throws std::invalid_argument
/// otherwise.
PauliFrame propagate_faults(const Circuit &c, std::span<const std::uint8_t> fault_pattern);

/// Precompiled fault propagation for all-Clifford circuits, for repeated
/// fault injection on one circuit.
class CliffordPropagator {
   public:
    /// Throws std::invalid_argument if any slot is not Clifford.
    explicit CliffordPropagator(const Circuit &c);

    std::size_t num_locations() const { return location_ops_.size(); }
    PauliFrame propagate(std::span<const std::uint8_t> fault_pattern) const;
    /// Single Pauli string injected at one location.
    PauliFrame propagate_single(std::size_t location, std::uint8_t pauli) const;

   private:
    struct Op {
        enum class Kind : std::uint8_t { SLOT, CZ, CNOT, LOCATION } kind;
        std::uint32_t q0 = 0;
        std::uint32_t q1 = 0;
        std::uint8_t arity = 0;
        std::uint32_t location = 0;
        std::array<Pauli, 4> image{};  // SLOT: conjugation table
    };
    PauliFrame run(std::size_t start, PauliFrame frame, std::span<const std::uint8_t> fault_pattern) const;

    std::vector<Op> ops_;
    std::vector<std::size_t> location_ops_;
};

}  // namespace accredit

#endif
