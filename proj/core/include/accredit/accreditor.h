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

#ifndef ACCREDIT_ACCREDITOR_H
#define ACCREDIT_ACCREDITOR_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "accredit/bit_string.h"
#include "accredit/circuit.h"
#include "accredit/parties.h"
#include "accredit/stats.h"

namespace accredit {

/// Alice's private bookkeeping for one run. Circuit index 0 is the target,
/// indices 1..n_l+n_tt are traps.
struct AccreditationPlan {
    std::size_t n_l = 0;
    std::size_t n_tt = 0;
    /// order[position] = circuit index executed at that position.
    std::vector<std::size_t> order;
    /// true_trap[circuit index]; always false for the target.
    std::vector<bool> true_trap;
    std::size_t target_position = 0;

    std::size_t batch_size() const { return n_l + n_tt + 1; }
};

/// Draws n_tt uniformly from [0, 10 n_l), a uniform execution order and a
/// uniform n_l-subset of the traps to keep.
AccreditationPlan plan_accreditation(std::size_t n_l, std::uint64_t seed);

/// Harness-only instrumentation.
struct AccreditationHooks {
    ExecutionObserver observer;
    /// Called with the compiled target and the list it actually ran under.
    std::function<void(const GeneratedCircuit &target, const CptpList &list)> on_target_execution;
};

struct AccreditationResult {
    bool aborted = false;
    AbortReason abort_reason = AbortReason::NONE;
    std::string abort_detail;

    std::optional<BitString> targ_result;
    std::optional<double> bound;

    /// Echo of the configuration, with k filled in.
    AccreditationConfig config;
    std::size_t n_l = 0;
    std::size_t n_tt = 0;
    TrapStatistics trap_stats;
    std::uint64_t transcript_digest = 0;
};

/// Runs the full protocol once. If cfg.k is unset it is measured with
/// estimate_detection_rate on c first. Throws std::invalid_argument on an
/// invalid config, std::runtime_error if the measured k is zero.
AccreditationResult accredit(const Circuit &c, const AccreditationConfig &cfg, AdversaryStrategy &adversary,
                             std::uint64_t seed, const AccreditationHooks &hooks = {});

/// Same, with the plan supplied by the caller (cfg.k must be set).
AccreditationResult accredit_with_plan(const Circuit &c, const AccreditationConfig &cfg, const AccreditationPlan &plan,
                                       AdversaryStrategy &adversary, std::uint64_t seed,
                                       const AccreditationHooks &hooks = {});

std::string serialize_result(const AccreditationResult &result);

}  // namespace accredit

#endif
