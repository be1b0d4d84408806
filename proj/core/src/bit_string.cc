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

#include "accredit/bit_string.h"

#include <bit>
#include <stdexcept>

namespace accredit {

BitString::BitString(std::size_t num_bits, std::uint32_t bits) : num_bits_(num_bits), bits_(bits) {
    if (num_bits > 32) {
        throw std::invalid_argument("BitString holds at most 32 bits.");
    }
    if (num_bits < 32) {
        bits_ &= (std::uint32_t{1} << num_bits) - 1;
    }
}

BitString BitString::from_string(std::string_view text) {
    BitString result(text.size(), 0);
    for (std::size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            result.set(k, true);
        } else if (text[k] != '0') {
            throw std::invalid_argument("Bit strings may only contain '0' and '1'.");
        }
    }
    return result;
}

void BitString::set(std::size_t k, bool value) {
    if (k >= num_bits_) {
        throw std::out_of_range("BitString index out of range.");
    }
    if (value) {
        bits_ |= std::uint32_t{1} << k;
    } else {
        bits_ &= ~(std::uint32_t{1} << k);
    }
}

std::size_t BitString::popcount() const {
    return static_cast<std::size_t>(std::popcount(bits_));
}

BitString BitString::operator^(const BitString &other) const {
    if (num_bits_ != other.num_bits_) {
        throw std::invalid_argument(
            "Bit string length mismatch: " + std::to_string(num_bits_) + " vs " +
            std::to_string(other.num_bits_) + ".");
    }
    return BitString(num_bits_, bits_ ^ other.bits_);
}

std::string BitString::str() const {
    std::string out(num_bits_, '0');
    for (std::size_t k = 0; k < num_bits_; k++) {
        if ((*this)[k]) {
            out[k] = '1';
        }
    }
    return out;
}

}  // namespace accredit
