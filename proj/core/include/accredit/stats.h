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

#ifndef ACCREDIT_STATS_H
#define ACCREDIT_STATS_H

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

namespace accredit {

enum class FactorMode {
    /// (1+beta)/(1-beta), the factor the interval argument actually proves.
    EXACT,
    /// 1+2beta, its first-order expansion.
    PAPER_APPROX,
};

std::string_view factor_mode_str(FactorMode mode);
FactorMode parse_factor_mode(std::string_view text);

struct AccreditationConfig {
    double theta = 0.1;
    double alpha = 0.95;
    double beta = 0;
    /// Trap detection lower bound. When unset the accreditor measures it.
    std::optional<double> k;
    FactorMode factor_mode = FactorMode::EXACT;
};

/// Throws std::invalid_argument unless theta > 0, 0 < alpha < 1,
/// 0 <= beta < 1 and (if set) 0 < k <= 1.
void validate_config(const AccreditationConfig &cfg);

struct TrapStatistics {
    std::size_t n_true_traps = 0;
    std::size_t n_flagged = 0;

    /// Fraction of true traps whose decrypted outcome was not m.
    double v_bar() const;
};

/// Arithmetic mean; throws on empty input.
double average(std::span<const double> values);

/// Hoeffding trap count ceil((2/theta^2) ln(2/(1-alpha))) + 1.
std::size_t n_traps(double theta, double alpha);

double bound_factor(double beta, FactorMode mode);

/// bound_factor(beta)/k * (v_bar + theta), clamped to [0, 1]. Uses cfg.k,
/// which must be set.
double variation_bound(const TrapStatistics &stats, const AccreditationConfig &cfg);

}  // namespace accredit

#endif
