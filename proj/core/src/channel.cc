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

#include "accredit/channel.h"

#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

#include "accredit/pauli.h"

namespace accredit {

namespace {

Eigen::Index dimension(int arity) { return Eigen::Index{1} << arity; }

void check_arity(int arity) {
    if (arity != 1 && arity != 2) {
        throw std::invalid_argument("channels act on 1 or 2 qubits, got arity " + std::to_string(arity) + ".");
    }
}

void check_probability(double p, const char *what) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument(std::string(what) + " must lie in [0, 1].");
    }
}

}  // namespace

NoiseChannel NoiseChannel::identity(int arity) {
    check_arity(arity);
    return NoiseChannel{arity, {Eigen::MatrixXcd::Identity(dimension(arity), dimension(arity))}};
}

NoiseChannel NoiseChannel::bit_flip(double q) {
    check_probability(q, "bit-flip probability");
    NoiseChannel ch{1, {}};
    ch.kraus.push_back(std::sqrt(1 - q) * pauli_string_matrix(0, 1));
    ch.kraus.push_back(std::sqrt(q) * pauli_string_matrix(1, 1));
    return ch;
}

NoiseChannel NoiseChannel::depolarizing(double p) {
    check_probability(p, "depolarizing parameter");
    double probs[4] = {1 - 3 * p / 4, p / 4, p / 4, p / 4};
    return pauli_mixture(1, probs);
}

NoiseChannel NoiseChannel::pauli_mixture(int arity, std::span<const double> probs) {
    check_arity(arity);
    if (probs.size() != num_pauli_strings(arity)) {
        throw std::invalid_argument("Pauli mixture needs 4^arity probabilities.");
    }
    NoiseChannel ch{arity, {}};
    for (std::size_t k = 0; k < probs.size(); k++) {
        if (probs[k] < 0) {
            throw std::invalid_argument("Pauli mixture probabilities must be non-negative.");
        }
        if (probs[k] > 0) {
            ch.kraus.push_back(std::sqrt(probs[k]) * pauli_string_matrix(k, arity));
        }
    }
    return ch;
}

bool validate_channel(const NoiseChannel &ch) {
    check_arity(ch.arity);
    Eigen::Index d = dimension(ch.arity);
    Eigen::MatrixXcd total = Eigen::MatrixXcd::Zero(d, d);
    for (const auto &k : ch.kraus) {
        if (k.rows() != d || k.cols() != d) {
            throw std::invalid_argument(
                "Kraus operator of dimension " + std::to_string(k.rows()) + "x" + std::to_string(k.cols()) +
                " in a channel on " + std::to_string(ch.arity) + " qubit(s).");
        }
        total += k.adjoint() * k;
    }
    return (total - Eigen::MatrixXcd::Identity(d, d)).cwiseAbs().maxCoeff() <= kKrausTolerance;
}

namespace {

// Pauli strings are real or purely imaginary per entry, so conj(P) is
// stored and tr(P^dagger K) becomes an entrywise product sum.
const std::vector<Eigen::MatrixXcd> &cached_pauli_strings(int arity) {
    static const auto build = [](int a) {
        std::vector<Eigen::MatrixXcd> t;
        for (std::size_t p = 0; p < num_pauli_strings(a); p++) {
            t.push_back(pauli_string_matrix(p, a).conjugate());
        }
        return t;
    };
    static const std::vector<Eigen::MatrixXcd> tables[2] = {build(1), build(2)};
    check_arity(arity);
    return tables[arity - 1];
}

}  // namespace

PauliChannel pauli_twirl(const NoiseChannel &ch) {
    if (!validate_channel(ch)) {
        throw std::invalid_argument("cannot twirl a channel that is not trace preserving.");
    }
    std::size_t n = num_pauli_strings(ch.arity);
    double d2 = static_cast<double>(dimension(ch.arity) * dimension(ch.arity));
    PauliChannel out{ch.arity, std::vector<double>(n, 0.0)};
    const auto &paulis = cached_pauli_strings(ch.arity);
    for (std::size_t p = 0; p < n; p++) {
        for (const auto &k : ch.kraus) {
            // tr(P^dagger K) without forming the product.
            out.probs[p] += std::norm(paulis[p].cwiseProduct(k).sum()) / d2;
        }
    }
    return out;
}

double twirled_identity_probability(const NoiseChannel &ch) {
    double d2 = static_cast<double>(dimension(ch.arity) * dimension(ch.arity));
    double total = 0;
    for (const auto &k : ch.kraus) {
        total += std::norm(k.trace()) / d2;
    }
    return total;
}

bool fits(const CptpList &list, std::span<const ErrorLocation> locations) {
    if (list.size() != locations.size()) {
        return false;
    }
    for (std::size_t k = 0; k < locations.size(); k++) {
        if (list.channels[k].arity != locations[k].arity()) {
            return false;
        }
    }
    return true;
}

bool fits(const CptpList &list, const Circuit &c) { return fits(list, error_locations(c)); }

double execution_error_probability(const CptpList &list, std::span<const ErrorLocation> locations) {
    if (!fits(list, locations)) {
        throw std::invalid_argument(
            "CPTP list does not fit the circuit: " + std::to_string(list.size()) + " channels for " +
            std::to_string(locations.size()) + " error locations or an arity mismatch.");
    }
    double no_error = 1;
    for (const auto &ch : list.channels) {
        if (!validate_channel(ch)) {
            throw std::invalid_argument("CPTP list contains a channel that is not trace preserving.");
        }
        no_error *= twirled_identity_probability(ch);
    }
    return 1 - no_error;
}

double execution_error_probability(const CptpList &list, const Circuit &c) {
    return execution_error_probability(list, error_locations(c));
}

void validate_spec(const SpsclSpec &spec) {
    if (!(spec.p0 >= 0 && spec.p0 <= 1)) {
        throw std::invalid_argument("P0 must lie in [0, 1].");
    }
    if (!(spec.beta >= 0 && spec.beta < 1)) {
        throw std::invalid_argument("beta must lie in [0, 1).");
    }
    if (spec.upper() > 0.8) {
        throw std::invalid_argument("declared SPSCL violates P0(1+beta) <= 4/5.");
    }
}

bool in_spscl_interval(const SpsclSpec &spec, double error_probability) {
    return error_probability >= spec.lower() - kIntervalTolerance &&
           error_probability <= spec.upper() + kIntervalTolerance;
}

bool spscl_contains(const SpsclSpec &spec, const CptpList &list, const Circuit &c) {
    auto locations = error_locations(c);
    if (locations != spec.location_template) {
        throw std::invalid_argument("SPSCL location template does not match the circuit.");
    }
    if (!fits(list, locations)) {
        return false;
    }
    return in_spscl_interval(spec, execution_error_probability(list, locations));
}

std::uint64_t list_digest(const CptpList &list) {
    // FNV-1a over arities and raw Kraus entries.
    std::uint64_t h = 14695981039346656037ULL;
    auto mix = [&h](const void *data, std::size_t n) {
        const auto *bytes = static_cast<const unsigned char *>(data);
        for (std::size_t k = 0; k < n; k++) {
            h ^= bytes[k];
            h *= 1099511628211ULL;
        }
    };
    for (const auto &ch : list.channels) {
        mix(&ch.arity, sizeof(ch.arity));
        for (const auto &k : ch.kraus) {
            for (Eigen::Index j = 0; j < k.size(); j++) {
                double parts[2] = {k.data()[j].real(), k.data()[j].imag()};
                mix(parts, sizeof(parts));
            }
        }
    }
    return h;
}

}  // namespace accredit
