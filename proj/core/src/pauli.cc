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

#include "accredit/pauli.h"

#include <array>
#include <complex>

namespace accredit {

namespace {

using cd = std::complex<double>;

constexpr std::array<char, 4> kPauliNames = {'I', 'X', 'Y', 'Z'};

// Equal up to a global phase drawn from {1, -1, i, -i}.
bool equal_up_to_phase(const Eigen::Matrix2cd &a, const Eigen::Matrix2cd &b) {
    constexpr double kTol = 1e-9;
    for (cd phase : {cd(1, 0), cd(-1, 0), cd(0, 1), cd(0, -1)}) {
        if ((a - phase * b).cwiseAbs().maxCoeff() < kTol) {
            return true;
        }
    }
    return false;
}

}  // namespace

Eigen::Matrix2cd pauli_matrix(Pauli p) {
    Eigen::Matrix2cd m;
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, cd(0, -1), cd(0, 1), 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

std::string pauli_string_name(std::size_t index, int arity) {
    std::string out;
    for (int k = 0; k < arity; k++) {
        out.push_back(kPauliNames[static_cast<std::size_t>(pauli_at(index, k))]);
    }
    return out;
}

Eigen::MatrixXcd pauli_string_matrix(std::size_t index, int arity) {
    Eigen::MatrixXcd result = Eigen::MatrixXcd::Identity(1, 1);
    for (int k = 0; k < arity; k++) {
        // Later qubits are more significant, so they go on the left.
        Eigen::Matrix2cd local = pauli_matrix(pauli_at(index, k));
        Eigen::MatrixXcd next(result.rows() * 2, result.cols() * 2);
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                next.block(r * result.rows(), c * result.cols(), result.rows(), result.cols()) =
                    local(r, c) * result;
            }
        }
        result = std::move(next);
    }
    return result;
}

std::optional<Pauli> conjugate_pauli(const Eigen::Matrix2cd &u, Pauli p) {
    if (p == Pauli::I) {
        return Pauli::I;
    }
    Eigen::Matrix2cd image = u * pauli_matrix(p) * u.adjoint();
    for (Pauli candidate : {Pauli::X, Pauli::Y, Pauli::Z}) {
        if (equal_up_to_phase(image, pauli_matrix(candidate))) {
            return candidate;
        }
    }
    return std::nullopt;
}

Pauli PauliFrame::at(std::size_t q) const {
    bool has_x = (x >> q) & 1U;
    bool has_z = (z >> q) & 1U;
    if (has_x && has_z) {
        return Pauli::Y;
    }
    if (has_x) {
        return Pauli::X;
    }
    return has_z ? Pauli::Z : Pauli::I;
}

void PauliFrame::set(std::size_t q, Pauli p) {
    std::uint32_t bit = std::uint32_t{1} << q;
    x &= ~bit;
    z &= ~bit;
    multiply(q, p);
}

void PauliFrame::multiply(std::size_t q, Pauli p) {
    std::uint32_t bit = std::uint32_t{1} << q;
    if (p == Pauli::X || p == Pauli::Y) {
        x ^= bit;
    }
    if (p == Pauli::Z || p == Pauli::Y) {
        z ^= bit;
    }
}

void PauliFrame::apply_cz(std::size_t a, std::size_t b) {
    std::uint32_t bit_a = std::uint32_t{1} << a;
    std::uint32_t bit_b = std::uint32_t{1} << b;
    std::uint32_t z_flip = 0;
    if (x & bit_a) {
        z_flip ^= bit_b;
    }
    if (x & bit_b) {
        z_flip ^= bit_a;
    }
    z ^= z_flip;
}

void PauliFrame::apply_cnot(std::size_t control, std::size_t target) {
    std::uint32_t cbit = std::uint32_t{1} << control;
    std::uint32_t tbit = std::uint32_t{1} << target;
    if (x & cbit) {
        x ^= tbit;
    }
    if (z & tbit) {
        z ^= cbit;
    }
}

}  // namespace accredit
