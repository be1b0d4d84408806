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

#include "accredit/parties.h"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "accredit/rng.h"
#include "json_util.h"

namespace accredit {

std::string_view verdict_str(Verdict v) {
    switch (v) {
        case Verdict::ACCEPT:
            return "accept";
        case Verdict::DOES_NOT_FIT:
            return "does-not-fit";
        case Verdict::OUTSIDE_INTERVAL:
            return "outside-interval";
    }
    return "?";
}

std::string_view abort_reason_str(AbortReason reason) {
    switch (reason) {
        case AbortReason::NONE:
            return "none";
        case AbortReason::REDACTION_CLASS_VIOLATION:
            return "redaction class violation";
        case AbortReason::INVALID_DECLARATION:
            return "invalid SPSCL declaration";
        case AbortReason::SUBMISSION_DOES_NOT_FIT:
            return "submission does not fit";
        case AbortReason::OUTSIDE_DECLARED_SPSCL:
            return "outside declared SPSCL";
    }
    return "?";
}

Verdict validate_submission(const SpsclSpec &spec, const CptpList &list, const RedactedCircuit &skeleton) {
    auto locations = error_locations(skeleton);
    if (locations != spec.location_template || !fits(list, locations)) {
        return Verdict::DOES_NOT_FIT;
    }
    for (const auto &ch : list.channels) {
        if (!validate_channel(ch)) {
            return Verdict::DOES_NOT_FIT;
        }
    }
    if (!in_spscl_interval(spec, execution_error_probability(list, locations))) {
        return Verdict::OUTSIDE_INTERVAL;
    }
    return Verdict::ACCEPT;
}

std::vector<BitString> ProtocolTranscript::outcomes() const {
    std::vector<BitString> out;
    for (const auto &e : entries) {
        if (e.encrypted_outcome) {
            out.push_back(*e.encrypted_outcome);
        }
    }
    return out;
}

std::uint64_t ProtocolTranscript::digest() const {
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](std::uint64_t v) { h = derive_seed(h, v); };
    for (const auto &e : entries) {
        mix(e.list_digest);
        mix(static_cast<std::uint64_t>(e.verdict));
        mix(e.encrypted_outcome ? e.encrypted_outcome->bits() : 0xFFFFFFFFULL);
        mix(e.seed);
    }
    mix(aborted ? 1 : 0);
    return h;
}

ProtocolTranscript run_execution_protocol(std::span<const GeneratedCircuit> batch, AdversaryStrategy &adversary,
                                          double beta, std::uint64_t seed, const ExecutionObserver &observer) {
    ProtocolTranscript transcript;
    auto abort = [&](AbortReason reason, std::string detail) {
        transcript.aborted = true;
        transcript.abort_reason = reason;
        transcript.abort_detail = std::move(detail);
        return transcript;
    };
    if (batch.empty()) {
        return transcript;
    }

    // Alice's obligation: one redaction class.
    RedactedCircuit skeleton = redact_circuit(batch.front().circuit);
    for (std::size_t i = 1; i < batch.size(); i++) {
        if (redact_circuit(batch[i].circuit) != skeleton) {
            return abort(AbortReason::REDACTION_CLASS_VIOLATION,
                         "circuit " + std::to_string(i) + " is outside the batch's redaction class");
        }
    }

    SpsclDeclaration declaration = adversary.on_batch(BatchAnnouncement{skeleton, batch.size(), beta});
    SpsclSpec spec{declaration.p0, declaration.beta, error_locations(skeleton)};
    if (declaration.beta != beta) {
        return abort(AbortReason::INVALID_DECLARATION, "declared beta differs from the agreed beta");
    }
    try {
        validate_spec(spec);
    } catch (const std::invalid_argument &e) {
        return abort(AbortReason::INVALID_DECLARATION, e.what());
    }
    transcript.declared = spec;

    std::vector<BitString> revealed;
    revealed.reserve(batch.size());
    for (std::size_t i = 0; i < batch.size(); i++) {
        CptpList list = adversary.on_next_execution(revealed);
        TranscriptEntry entry;
        entry.list_digest = list_digest(list);
        entry.seed = derive_seed(seed, i);
        entry.verdict = validate_submission(spec, list, skeleton);
        if (entry.verdict == Verdict::DOES_NOT_FIT) {
            entry.error_probability = std::numeric_limits<double>::quiet_NaN();
            transcript.entries.push_back(entry);
            return abort(AbortReason::SUBMISSION_DOES_NOT_FIT,
                         "execution " + std::to_string(i) + ": list does not fit the skeleton");
        }
        entry.error_probability = execution_error_probability(list, spec.location_template);
        if (entry.verdict == Verdict::OUTSIDE_INTERVAL) {
            transcript.entries.push_back(entry);
            return abort(AbortReason::OUTSIDE_DECLARED_SPSCL,
                         "execution " + std::to_string(i) + ": error probability " +
                             std::to_string(entry.error_probability) + " outside declared SPSCL");
        }

        ExecutionRecord record = sample_execution(batch[i].circuit, list, entry.seed);
        if (observer) {
            observer(i, list, record);
        }
        entry.encrypted_outcome = record.outcome;
        revealed.push_back(record.outcome);
        transcript.entries.push_back(std::move(entry));
    }
    return transcript;
}

std::string serialize_transcript(const ProtocolTranscript &transcript) {
    using detail::json;
    json entries = json::array();
    for (const auto &e : transcript.entries) {
        json entry{
            {"list_digest", e.list_digest},
            {"verdict", verdict_str(e.verdict)},
            {"seed", e.seed},
        };
        entry["error_probability"] = std::isnan(e.error_probability) ? json(nullptr) : json(e.error_probability);
        entry["encrypted_outcome"] = e.encrypted_outcome ? json(e.encrypted_outcome->str()) : json(nullptr);
        entries.push_back(std::move(entry));
    }
    json out{
        {"entries", std::move(entries)},
        {"aborted", transcript.aborted},
        {"abort_reason", abort_reason_str(transcript.abort_reason)},
        {"abort_detail", transcript.abort_detail},
    };
    if (transcript.declared) {
        out["declared"] = {{"p0", transcript.declared->p0}, {"beta", transcript.declared->beta}};
    } else {
        out["declared"] = nullptr;
    }
    return out.dump(2);
}

}  // namespace accredit
