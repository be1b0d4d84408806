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

#ifndef ACCREDIT_ADVERSARIES_H
#define ACCREDIT_ADVERSARIES_H

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accredit/channel.h"
#include "accredit/circuit.h"
#include "accredit/parties.h"
#include "accredit/pauli.h"

namespace accredit {

struct AdversaryParams {
    double p0 = 0.1;
    std::uint64_t seed = 0;
};

// Built-in strategies, selectable by name:
//   iid       the same depolarizing list, error probability P0, every time
//   drift     error probability oscillates across [P0(1-beta), P0(1+beta)]
//   adaptive  picks the list from the parity of the last encrypted outcome
//   cheat     submits error probability P0(1+2beta), outside its declaration
//   targeted  mixes maximal pre-measurement bit flips with undetectable
//             (and harmless) preparation-Z noise, hoping to hit the target
std::unique_ptr<AdversaryStrategy> make_adversary(std::string_view name, const AdversaryParams &params);
std::vector<std::string> adversary_names();

/// Depolarizing noise at every location with total error probability p.
CptpList spread_depolarizing_list(std::span<const ErrorLocation> locations, double error_probability);

/// Error probability p concentrated on locations of one kind as the single
/// Pauli `pauli`; every other location is noiseless.
CptpList concentrated_list(std::span<const ErrorLocation> locations, double error_probability, LocationKind kind,
                           Pauli pauli);

}  // namespace accredit

#endif
