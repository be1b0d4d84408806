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

#ifndef ACCREDIT_PAULI_H
#define ACCREDIT_PAULI_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

namespace accredit {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

Eigen::Matrix2cd pauli_matrix(Pauli p);

// Pauli strings over a location's qubits are indexed in base 4 with the
// location's first qubit as the least significant digit, so index 1 on a
// two-qubit location is X on the first qubit and I on the second.
inline std::size_t num_pauli_strings(int arity) { return std::size_t{1} << (2 * arity); }
inline Pauli pauli_at(std::size_t index, int slot) {
    return static_cast<Pauli>((index >> (2 * slot)) & 3U);
}
std::string pauli_string_name(std::size_t index, int arity);

/// Dense matrix of a Pauli string; qubit 0 of the location is the least
/// significant bit of the matrix index.
Eigen::MatrixXcd pauli_string_matrix(std::size_t index, int arity);

/// Returns U P U^dagger as a Pauli (phase dropped), or nullopt when U is not
/// a single-qubit Clifford.
std::optional<Pauli> conjugate_pauli(const Eigen::Matrix2cd &u, Pauli p);

/// Multi-qubit Pauli operator modulo phase, stored as X and Z bit masks.
struct PauliFrame {
    std::uint32_t x = 0;
    std::uint32_t z = 0;

    Pauli at(std::size_t q) const;
    void set(std::size_t q, Pauli p);
    void multiply(std::size_t q, Pauli p);
    void apply_cz(std::size_t a, std::size_t b);
    void apply_cnot(std::size_t control, std::size_t target);
    bool is_identity() const { return x == 0 && z == 0; }
    bool operator==(const PauliFrame &) const = default;
};

}  // namespace accredit

#endif
