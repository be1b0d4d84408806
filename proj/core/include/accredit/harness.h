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

#ifndef ACCREDIT_HARNESS_H
#define ACCREDIT_HARNESS_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "accredit/circuit.h"
#include "accredit/stats.h"

namespace accredit {

struct ExperimentConfig {
    Circuit circuit;
    double theta = 0.1;
    double alpha = 0.95;
    double beta = 0;
    std::string adversary = "iid";
    double p0 = 0.1;
    std::size_t runs = 1;
    std::uint64_t seed = 0;
    FactorMode factor_mode = FactorMode::EXACT;
    /// Overrides the measured detection rate.
    std::optional<double> k;
    /// Trap draws used when k is measured.
    std::size_t detection_samples = 1000;
};

struct ExperimentRow {
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::size_t n_l = 0;
    std::size_t n_tt = 0;
    /// NaN when the run aborted.
    double v_bar = 0;
    double bound = 0;
    double true_nu = 0;
    bool covered = false;
    bool aborted = false;
};

struct ExperimentSummary {
    std::size_t runs = 0;
    std::size_t aborts = 0;
    std::size_t covered = 0;
    /// covered / non-aborted runs; NaN if every run aborted.
    double coverage = 0;
    double mean_bound = 0;
    double k = 0;
};

struct ExperimentReport {
    std::vector<ExperimentRow> rows;
    ExperimentSummary summary;
};

/// Runs cfg.runs independent accreditations, run i seeded with cfg.seed + i.
/// k is measured once up front unless overridden. The true variation
/// distance of each target is computed exactly from the list the adversary
/// actually submitted for it.
ExperimentReport run_soundness_experiment(const ExperimentConfig &cfg);

ExperimentSummary summarize(const std::vector<ExperimentRow> &rows, double k);

void write_csv(const ExperimentReport &report, std::ostream &out);
std::string serialize_summary(const ExperimentSummary &summary);

}  // namespace accredit

#endif
