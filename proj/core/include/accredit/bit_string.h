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

#ifndef ACCREDIT_BIT_STRING_H
#define ACCREDIT_BIT_STRING_H

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace accredit {

/// A measurement record of up to 32 bits. Bit i belongs to qubit i and is
/// printed at string position i (qubit 0 first).
class BitString {
   public:
    BitString() = default;
    BitString(std::size_t num_bits, std::uint32_t bits);

    static BitString zeros(std::size_t num_bits) { return BitString(num_bits, 0); }
    static BitString from_string(std::string_view text);
    template <typename Rng>
    static BitString random(std::size_t num_bits, Rng &rng) {
        std::uniform_int_distribution<std::uint32_t> dist(0, 1);
        std::uint32_t bits = 0;
        for (std::size_t k = 0; k < num_bits; k++) {
            bits |= dist(rng) << k;
        }
        return BitString(num_bits, bits);
    }

    std::size_t size() const { return num_bits_; }
    std::uint32_t bits() const { return bits_; }
    bool operator[](std::size_t k) const { return (bits_ >> k) & 1U; }
    void set(std::size_t k, bool value);
    bool is_zero() const { return bits_ == 0; }
    std::size_t popcount() const;

    /// Bitwise XOR; throws std::invalid_argument on a length mismatch.
    BitString operator^(const BitString &other) const;

    bool operator==(const BitString &other) const = default;
    std::string str() const;

   private:
    std::size_t num_bits_ = 0;
    std::uint32_t bits_ = 0;
};

}  // namespace accredit

#endif
