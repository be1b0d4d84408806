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

#include "accredit/adversaries.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>

#include "accredit/pauli.h"
#include "accredit/rng.h"

namespace accredit {

namespace {

// Channel with twirled identity probability p_identity and the remaining
// mass spread evenly over the non-identity Pauli strings.
NoiseChannel depolarizing_with_identity(int arity, double p_identity) {
    std::vector<double> probs(num_pauli_strings(arity), (1 - p_identity) / static_cast<double>(num_pauli_strings(arity) - 1));
    probs[0] = p_identity;
    return NoiseChannel::pauli_mixture(arity, probs);
}

void check_error_probability(double p) {
    if (!(p >= 0 && p < 1)) {
        throw std::invalid_argument("list error probability must lie in [0, 1).");
    }
}

class StrategyBase : public AdversaryStrategy {
   public:
    explicit StrategyBase(const AdversaryParams &params) : params_(params), rng_(params.seed) {}

    SpsclDeclaration on_batch(const BatchAnnouncement &announcement) override {
        locations_ = error_locations(announcement.skeleton);
        batch_size_ = announcement.batch_size;
        beta_ = announcement.beta;
        return {params_.p0, beta_};
    }

   protected:
    double low() const { return params_.p0 * (1 - beta_); }
    double high() const { return params_.p0 * (1 + beta_); }

    AdversaryParams params_;
    Rng rng_;
    std::vector<ErrorLocation> locations_;
    std::size_t batch_size_ = 0;
    double beta_ = 0;
};

class IidAdversary final : public StrategyBase {
   public:
    using StrategyBase::StrategyBase;

    CptpList on_next_execution(std::span<const BitString>) override {
        if (!cached_) {
            cached_ = spread_depolarizing_list(locations_, params_.p0);
        }
        return *cached_;
    }

   private:
    std::optional<CptpList> cached_;
};

class DriftAdversary final : public StrategyBase {
   public:
    using StrategyBase::StrategyBase;

    CptpList on_next_execution(std::span<const BitString> history) override {
        double period = std::max(2.0, static_cast<double>(batch_size_) / 3.0);
        double phase = 2 * std::numbers::pi * static_cast<double>(history.size()) / period;
        return spread_depolarizing_list(locations_, params_.p0 * (1 + beta_ * std::sin(phase)));
    }
};

class AdaptiveAdversary final : public StrategyBase {
   public:
    using StrategyBase::StrategyBase;

    CptpList on_next_execution(std::span<const BitString> history) override {
        if (!history.empty() && history.back().popcount() % 2 == 1) {
            return concentrated_list(locations_, high(), LocationKind::PRE_MEASUREMENT, Pauli::X);
        }
        return spread_depolarizing_list(locations_, low());
    }
};

class CheatAdversary final : public StrategyBase {
   public:
    using StrategyBase::StrategyBase;

    CptpList on_next_execution(std::span<const BitString>) override {
        double p = beta_ > 0 ? params_.p0 * (1 + 2 * beta_) : params_.p0 + 0.05;
        return spread_depolarizing_list(locations_, std::min(p, 0.999));
    }
};

class TargetedAdversary final : public StrategyBase {
   public:
    using StrategyBase::StrategyBase;

    CptpList on_next_execution(std::span<const BitString>) override {
        if (std::bernoulli_distribution(0.5)(rng_)) {
            return concentrated_list(locations_, high(), LocationKind::PRE_MEASUREMENT, Pauli::X);
        }
        return concentrated_list(locations_, low(), LocationKind::STATE_PREP, Pauli::Z);
    }
};

}  // namespace

CptpList spread_depolarizing_list(std::span<const ErrorLocation> locations, double error_probability) {
    check_error_probability(error_probability);
    if (locations.empty()) {
        throw std::invalid_argument("cannot spread noise over zero locations.");
    }
    double per_location = std::pow(1 - error_probability, 1.0 / static_cast<double>(locations.size()));
    CptpList list;
    list.channels.reserve(locations.size());
    for (const auto &loc : locations) {
        list.channels.push_back(depolarizing_with_identity(loc.arity(), per_location));
    }
    return list;
}

CptpList concentrated_list(std::span<const ErrorLocation> locations, double error_probability, LocationKind kind,
                           Pauli pauli) {
    check_error_probability(error_probability);
    std::size_t count = 0;
    for (const auto &loc : locations) {
        count += loc.kind == kind && loc.arity() == 1 ? 1 : 0;
    }
    if (count == 0) {
        throw std::invalid_argument("no single-qubit locations of the requested kind.");
    }
    double per_location = std::pow(1 - error_probability, 1.0 / static_cast<double>(count));
    CptpList list;
    list.channels.reserve(locations.size());
    for (const auto &loc : locations) {
        if (loc.kind == kind && loc.arity() == 1) {
            double probs[4] = {per_location, 0, 0, 0};
            probs[static_cast<std::size_t>(pauli)] += 1 - per_location;
            list.channels.push_back(NoiseChannel::pauli_mixture(1, probs));
        } else {
            list.channels.push_back(NoiseChannel::identity(loc.arity()));
        }
    }
    return list;
}

std::unique_ptr<AdversaryStrategy> make_adversary(std::string_view name, const AdversaryParams &params) {
    if (name == "iid") {
        return std::make_unique<IidAdversary>(params);
    }
    if (name == "drift") {
        return std::make_unique<DriftAdversary>(params);
    }
    if (name == "adaptive") {
        return std::make_unique<AdaptiveAdversary>(params);
    }
    if (name == "cheat") {
        return std::make_unique<CheatAdversary>(params);
    }
    if (name == "targeted") {
        return std::make_unique<TargetedAdversary>(params);
    }
    throw std::invalid_argument("unknown adversary '" + std::string(name) + "'.");
}

std::vector<std::string> adversary_names() { return {"iid", "drift", "adaptive", "cheat", "targeted"}; }

}  // namespace accredit
