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

#ifndef ACCREDIT_TESTS_PROTOCOL_UTIL_H
#define ACCREDIT_TESTS_PROTOCOL_UTIL_H

#include <functional>
#include <memory>
#include <utility>
#include <vector>

#include "accredit/adversaries.h"
#include "accredit/parties.h"
#include "accredit/rng.h"

namespace accredit::testing {

/// Everything an adversary was handed, in order.
struct Observation {
    std::vector<BatchAnnouncement> announcements;
    std::vector<std::vector<BitString>> histories;
};

/// Forwards to an inner strategy and records every input it receives.
class RecordingAdversary : public AdversaryStrategy {
   public:
    explicit RecordingAdversary(std::unique_ptr<AdversaryStrategy> inner) : inner_(std::move(inner)) {}

    SpsclDeclaration on_batch(const BatchAnnouncement &announcement) override {
        seen.announcements.push_back(announcement);
        return inner_->on_batch(announcement);
    }
    CptpList on_next_execution(std::span<const BitString> history) override {
        seen.histories.emplace_back(history.begin(), history.end());
        return inner_->on_next_execution(history);
    }

    Observation seen;

   private:
    std::unique_ptr<AdversaryStrategy> inner_;
};

/// Hands the inner strategy fresh uniform bits instead of the real
/// encrypted history.
class RandomFedAdversary : public AdversaryStrategy {
   public:
    RandomFedAdversary(std::unique_ptr<AdversaryStrategy> inner, std::uint64_t seed)
        : inner_(std::move(inner)), rng_(seed) {}

    SpsclDeclaration on_batch(const BatchAnnouncement &announcement) override {
        num_qubits_ = announcement.skeleton.num_qubits;
        return inner_->on_batch(announcement);
    }
    CptpList on_next_execution(std::span<const BitString> history) override {
        while (fake_.size() < history.size()) {
            fake_.push_back(BitString::random(num_qubits_, rng_));
        }
        return inner_->on_next_execution(std::span<const BitString>(fake_.data(), history.size()));
    }

   private:
    std::unique_ptr<AdversaryStrategy> inner_;
    Rng rng_;
    std::size_t num_qubits_ = 0;
    std::vector<BitString> fake_;
};

/// Submits whatever `make_list` returns, declaring (p0, beta).
class ScriptedAdversary : public AdversaryStrategy {
   public:
    using ListFn = std::function<CptpList(const std::vector<ErrorLocation> &, std::size_t index)>;

    ScriptedAdversary(SpsclDeclaration declaration, ListFn make_list)
        : declaration_(declaration), make_list_(std::move(make_list)) {}

    SpsclDeclaration on_batch(const BatchAnnouncement &announcement) override {
        locations_ = error_locations(announcement.skeleton);
        return declaration_;
    }
    CptpList on_next_execution(std::span<const BitString> history) override {
        calls++;
        return make_list_(locations_, history.size());
    }

    std::size_t calls = 0;

   private:
    SpsclDeclaration declaration_;
    ListFn make_list_;
    std::vector<ErrorLocation> locations_;
};

}  // namespace accredit::testing

#endif
