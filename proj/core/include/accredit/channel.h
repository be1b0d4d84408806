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

#ifndef ACCREDIT_CHANNEL_H
#define ACCREDIT_CHANNEL_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "accredit/circuit.h"

namespace accredit {

/// Entrywise tolerance for Kraus completeness (sum K^dagger K = I).
constexpr double kKrausTolerance = 1e-10;
/// Slack at the endpoints of an SPSCL interval.
constexpr double kIntervalTolerance = 1e-12;

/// A CPTP map in Kraus form on 1 or 2 qubits.
struct NoiseChannel {
    int arity = 1;
    std::vector<Eigen::MatrixXcd> kraus;

    static NoiseChannel identity(int arity = 1);
    /// rho -> (1-q) rho + q X rho X.
    static NoiseChannel bit_flip(double q);
    /// rho -> (1-p) rho + p I/2.
    static NoiseChannel depolarizing(double p);
    /// sum_P probs[P] P rho P over the 4^arity Pauli strings.
    static NoiseChannel pauli_mixture(int arity, std::span<const double> probs);
};

/// True iff the Kraus operators are complete to kKrausTolerance. Throws
/// std::invalid_argument when an operator has the wrong dimension.
bool validate_channel(const NoiseChannel &ch);

/// Stochastic Pauli channel, probabilities indexed as in pauli.h.
struct PauliChannel {
    int arity = 1;
    std::vector<double> probs;

    double p_identity() const { return probs.front(); }
};

/// Twirled channel: coefficient of P is sum_i |tr(P^dagger K_i)|^2 / d^2.
PauliChannel pauli_twirl(const NoiseChannel &ch);

/// Identity coefficient of the twirl without building the whole channel.
double twirled_identity_probability(const NoiseChannel &ch);

/// One channel per error location, in error_locations() order.
struct CptpList {
    std::vector<NoiseChannel> channels;

    std::size_t size() const { return channels.size(); }
};

/// Lengths match and each channel's arity equals its location's qubit count.
bool fits(const CptpList &list, std::span<const ErrorLocation> locations);
bool fits(const CptpList &list, const Circuit &c);

/// 1 - prod over locations of the twirled identity probability. Throws
/// std::invalid_argument("does not fit ...") when the list does not fit.
double execution_error_probability(const CptpList &list, std::span<const ErrorLocation> locations);
double execution_error_probability(const CptpList &list, const Circuit &c);

/// Intensional description of an SPSCL_beta: every member list fits
/// `location_template` and has error probability in [P0(1-beta), P0(1+beta)].
struct SpsclSpec {
    double p0 = 0;
    double beta = 0;
    std::vector<ErrorLocation> location_template;

    double lower() const { return p0 * (1 - beta); }
    double upper() const { return p0 * (1 + beta); }
};

/// Throws std::invalid_argument unless 0 <= P0 <= 1, 0 <= beta < 1 and
/// P0(1+beta) <= 4/5.
void validate_spec(const SpsclSpec &spec);

/// Error probability inside the closed interval (kIntervalTolerance slack).
bool in_spscl_interval(const SpsclSpec &spec, double error_probability);

/// Throws std::invalid_argument on a template mismatch with `c`.
bool spscl_contains(const SpsclSpec &spec, const CptpList &list, const Circuit &c);

/// Content hash of a list, for transcripts.
std::uint64_t list_digest(const CptpList &list);

}  // namespace accredit

#endif
