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

#include "accredit/stats.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace accredit {

std::string_view factor_mode_str(FactorMode mode) { return mode == FactorMode::EXACT ? "exact" : "paper"; }

FactorMode parse_factor_mode(std::string_view text) {
    if (text == "exact") {
        return FactorMode::EXACT;
    }
    if (text == "paper" || text == "paper-approx") {
        return FactorMode::PAPER_APPROX;
    }
    throw std::invalid_argument("factor mode must be 'exact' or 'paper', got '" + std::string(text) + "'.");
}

void validate_config(const AccreditationConfig &cfg) {
    if (!(cfg.theta > 0) || !std::isfinite(cfg.theta)) {
        throw std::invalid_argument("theta out of range: must be positive.");
    }
    if (!(cfg.alpha > 0 && cfg.alpha < 1)) {
        throw std::invalid_argument("alpha out of range: must lie in (0, 1).");
    }
    if (!(cfg.beta >= 0 && cfg.beta < 1)) {
        throw std::invalid_argument("beta out of range: must lie in [0, 1).");
    }
    if (cfg.k && !(*cfg.k > 0 && *cfg.k <= 1)) {
        throw std::invalid_argument("k out of range: must lie in (0, 1].");
    }
}

double TrapStatistics::v_bar() const {
    if (n_true_traps == 0) {
        throw std::invalid_argument("v_bar needs at least one true trap.");
    }
    if (n_flagged > n_true_traps) {
        throw std::invalid_argument("more flagged traps than true traps.");
    }
    return static_cast<double>(n_flagged) / static_cast<double>(n_true_traps);
}

double average(std::span<const double> values) {
    if (values.empty()) {
        throw std::invalid_argument("average of an empty sequence.");
    }
    double total = 0;
    for (double v : values) {
        total += v;
    }
    return total / static_cast<double>(values.size());
}

std::size_t n_traps(double theta, double alpha) {
    if (!(theta > 0) || !std::isfinite(theta)) {
        throw std::invalid_argument("theta out of range: must be positive.");
    }
    if (!(alpha > 0 && alpha < 1)) {
        throw std::invalid_argument("alpha out of range: must lie in (0, 1).");
    }
    double raw = (2 / (theta * theta)) * std::log(2 / (1 - alpha));
    return static_cast<std::size_t>(std::ceil(raw)) + 1;
}

double bound_factor(double beta, FactorMode mode) {
    if (!(beta >= 0 && beta < 1)) {
        throw std::invalid_argument("beta out of range: must lie in [0, 1).");
    }
    return mode == FactorMode::EXACT ? (1 + beta) / (1 - beta) : 1 + 2 * beta;
}

double variation_bound(const TrapStatistics &stats, const AccreditationConfig &cfg) {
    validate_config(cfg);
    if (!cfg.k) {
        throw std::invalid_argument("variation bound needs a detection rate k.");
    }
    double bound = bound_factor(cfg.beta, cfg.factor_mode) / *cfg.k * (stats.v_bar() + cfg.theta);
    return std::clamp(bound, 0.0, 1.0);
}

}  // namespace accredit
