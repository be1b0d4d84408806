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

#ifndef ACCREDIT_PARTIES_H
#define ACCREDIT_PARTIES_H

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "accredit/bit_string.h"
#include "accredit/channel.h"
#include "accredit/circuit.h"
#include "accredit/simulator.h"
#include "accredit/trap_factory.h"

namespace accredit {

/// Bob's commitment for one batch: the SPSCL_beta centred on p0.
struct SpsclDeclaration {
    double p0 = 0;
    double beta = 0;
};

/// Everything Bob learns before the first execution.
struct BatchAnnouncement {
    RedactedCircuit skeleton;
    std::size_t batch_size = 0;
    double beta = 0;
};

/// Bob. Implementations only ever see redacted skeletons, the batch size,
/// beta and encrypted outcomes.
class AdversaryStrategy {
   public:
    virtual ~AdversaryStrategy() = default;

    virtual SpsclDeclaration on_batch(const BatchAnnouncement &announcement) = 0;
    /// Called once per execution, in order, with every encrypted outcome
    /// revealed so far.
    virtual CptpList on_next_execution(std::span<const BitString> encrypted_history) = 0;
};

enum class Verdict : std::uint8_t { ACCEPT, DOES_NOT_FIT, OUTSIDE_INTERVAL };
std::string_view verdict_str(Verdict v);

/// Robert's check, computable from the skeleton alone.
Verdict validate_submission(const SpsclSpec &spec, const CptpList &list, const RedactedCircuit &skeleton);

enum class AbortReason : std::uint8_t {
    NONE,
    REDACTION_CLASS_VIOLATION,
    INVALID_DECLARATION,
    SUBMISSION_DOES_NOT_FIT,
    OUTSIDE_DECLARED_SPSCL,
};
std::string_view abort_reason_str(AbortReason reason);

struct TranscriptEntry {
    std::uint64_t list_digest = 0;
    Verdict verdict = Verdict::ACCEPT;
    /// Twirled error probability of the submitted list (NaN if it did not fit).
    double error_probability = 0;
    /// Absent when the submission was rejected.
    std::optional<BitString> encrypted_outcome;
    std::uint64_t seed = 0;
};

struct ProtocolTranscript {
    std::optional<SpsclSpec> declared;
    std::vector<TranscriptEntry> entries;
    bool aborted = false;
    AbortReason abort_reason = AbortReason::NONE;
    std::string abort_detail;

    /// Encrypted outcomes in execution order.
    std::vector<BitString> outcomes() const;
    std::uint64_t digest() const;
};

/// Omniscient hook for harnesses: sees every executed list and its record.
/// Never handed to Alice or Bob.
using ExecutionObserver =
    std::function<void(std::size_t index, const CptpList &list, const ExecutionRecord &record)>;

/// Runs one batch through Robert: redact once, announce, take Bob's
/// declaration, then for each circuit in order take a list, check it,
/// execute it and reveal the encrypted outcome. Aborts at the first
/// violation; rejected lists are never executed.
ProtocolTranscript run_execution_protocol(std::span<const GeneratedCircuit> batch, AdversaryStrategy &adversary,
                                          double beta, std::uint64_t seed, const ExecutionObserver &observer = {});

std::string serialize_transcript(const ProtocolTranscript &transcript);

}  // namespace accredit

#endif
