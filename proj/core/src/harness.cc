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

#include "accredit/harness.h"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "accredit/accreditor.h"
#include "accredit/adversaries.h"
#include "accredit/rng.h"
#include "accredit/simulator.h"
#include "accredit/trap_factory.h"
#include "json_util.h"

namespace accredit {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string format_double(double v) {
    if (std::isnan(v)) {
        return "";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

ExperimentReport run_soundness_experiment(const ExperimentConfig &cfg) {
    Circuit circuit = validate_circuit(cfg.circuit);
    AccreditationConfig acfg{cfg.theta, cfg.alpha, cfg.beta, cfg.k, cfg.factor_mode};
    validate_config(acfg);
    // Fail on a bad name before doing any work.
    make_adversary(cfg.adversary, AdversaryParams{cfg.p0, cfg.seed});

    ExperimentReport report;
    if (cfg.runs == 0) {
        report.summary = summarize(report.rows, acfg.k.value_or(0));
        return report;
    }
    if (!acfg.k) {
        DetectionOptions options;
        options.samples = cfg.detection_samples;
        options.seed = derive_seed(cfg.seed, 0xD37EC7);
        acfg.k = estimate_detection_rate(circuit, options).k;
        if (!(*acfg.k > 0)) {
            throw std::runtime_error("measured trap detection rate is zero; no bound can be certified.");
        }
    }

    for (std::size_t i = 0; i < cfg.runs; i++) {
        ExperimentRow row;
        row.run = i;
        row.seed = cfg.seed + i;
        auto adversary = make_adversary(cfg.adversary, AdversaryParams{cfg.p0, row.seed});

        std::optional<double> true_nu;
        AccreditationHooks hooks;
        hooks.on_target_execution = [&](const GeneratedCircuit &target, const CptpList &list) {
            // Compiled and original targets differ only by the output key, a
            // bijection on outcomes, so distances can be taken on the
            // compiled circuit directly.
            true_nu = variation_distance(output_distribution(target.circuit, list),
                                         output_distribution(target.circuit));
        };
        AccreditationResult result = accredit(circuit, acfg, *adversary, row.seed, hooks);
        row.n_l = result.n_l;
        row.n_tt = result.n_tt;
        row.aborted = result.aborted;
        if (result.aborted) {
            row.v_bar = row.bound = row.true_nu = kNaN;
        } else {
            row.v_bar = result.trap_stats.v_bar();
            row.bound = *result.bound;
            row.true_nu = true_nu.value_or(kNaN);
            row.covered = row.true_nu <= row.bound;
        }
        report.rows.push_back(row);
    }
    report.summary = summarize(report.rows, *acfg.k);
    return report;
}

ExperimentSummary summarize(const std::vector<ExperimentRow> &rows, double k) {
    ExperimentSummary s;
    s.runs = rows.size();
    s.k = k;
    double bound_total = 0;
    for (const auto &row : rows) {
        if (row.aborted) {
            s.aborts++;
            continue;
        }
        s.covered += row.covered ? 1 : 0;
        bound_total += row.bound;
    }
    std::size_t completed = s.runs - s.aborts;
    s.coverage = completed ? static_cast<double>(s.covered) / static_cast<double>(completed) : kNaN;
    s.mean_bound = completed ? bound_total / static_cast<double>(completed) : kNaN;
    return s;
}

void write_csv(const ExperimentReport &report, std::ostream &out) {
    out << "run,seed,n_l,n_tt,v_bar,bound,true_nu,covered,aborted\n";
    for (const auto &row : report.rows) {
        out << row.run << ',' << row.seed << ',' << row.n_l << ',' << row.n_tt << ',' << format_double(row.v_bar)
            << ',' << format_double(row.bound) << ',' << format_double(row.true_nu) << ','
            << (row.covered ? 1 : 0) << ',' << (row.aborted ? 1 : 0) << '\n';
    }
}

std::string serialize_summary(const ExperimentSummary &summary) {
    using detail::json;
    auto num = [](double v) { return std::isnan(v) ? json(nullptr) : json(v); };
    json out{
        {"runs", summary.runs},
        {"aborts", summary.aborts},
        {"covered", summary.covered},
        {"coverage", num(summary.coverage)},
        {"mean_bound", num(summary.mean_bound)},
        {"k", summary.k},
    };
    return out.dump(2);
}

}  // namespace accredit
