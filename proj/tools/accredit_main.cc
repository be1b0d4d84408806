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

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "accredit/adversaries.h"
#include "accredit/circuit_io.h"
#include "accredit/harness.h"
#include "accredit/stats.h"
#include "accredit/trap_factory.h"

namespace {

int run_command(const accredit::ExperimentConfig &cfg, const std::string &out_path) {
    accredit::ExperimentReport report = accredit::run_soundness_experiment(cfg);
    if (out_path.empty() || out_path == "-") {
        accredit::write_csv(report, std::cout);
    } else {
        std::ofstream csv(out_path);
        if (!csv) {
            std::cerr << "cannot open " << out_path << " for writing\n";
            return 1;
        }
        accredit::write_csv(report, csv);
        std::ofstream(out_path + ".summary.json") << accredit::serialize_summary(report.summary) << '\n';
    }
    std::cerr << accredit::serialize_summary(report.summary) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"accredit: accreditation protocol simulator"};
    app.require_subcommand(1);

    accredit::ExperimentConfig cfg;
    std::string circuit_path;
    std::string out_path;
    std::string factor = "exact";
    std::optional<double> k_override;

    auto *run = app.add_subcommand("run", "Monte Carlo soundness experiment");
    run->add_option("--circuit", circuit_path, "Circuit JSON file")->required()->check(CLI::ExistingFile);
    run->add_option("--theta", cfg.theta)->required();
    run->add_option("--alpha", cfg.alpha)->required();
    run->add_option("--beta", cfg.beta)->required();
    run->add_option("--adversary", cfg.adversary)
        ->required()
        ->check(CLI::IsMember(accredit::adversary_names()));
    run->add_option("--p0", cfg.p0, "Declared SPSCL centre")->capture_default_str();
    run->add_option("--runs", cfg.runs)->required();
    run->add_option("--seed", cfg.seed)->required();
    run->add_option("--factor", factor)->check(CLI::IsMember({"exact", "paper"}))->capture_default_str();
    run->add_option("--k", k_override, "Use this detection rate instead of measuring it");
    run->add_option("--k-samples", cfg.detection_samples, "Trap draws when measuring k")->capture_default_str();
    run->add_option("--out", out_path, "CSV output path ('-' for stdout)")->required();

    std::size_t samples = 1000;
    std::uint64_t k_seed = 0;
    auto *estimate = app.add_subcommand("estimate-k", "Measure the trap detection rate");
    estimate->add_option("--circuit", circuit_path)->required()->check(CLI::ExistingFile);
    estimate->add_option("--samples", samples)->required();
    estimate->add_option("--seed", k_seed)->capture_default_str();

    double theta = 0;
    double alpha = 0;
    auto *ntraps = app.add_subcommand("n-traps", "Hoeffding trap count");
    ntraps->add_option("--theta", theta)->required();
    ntraps->add_option("--alpha", alpha)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*run) {
            cfg.circuit = accredit::load_circuit_file(circuit_path);
            cfg.factor_mode = accredit::parse_factor_mode(factor);
            cfg.k = k_override;
            return run_command(cfg, out_path);
        }
        if (*estimate) {
            accredit::DetectionOptions options;
            options.samples = samples;
            options.seed = k_seed;
            auto report = accredit::estimate_detection_rate(accredit::load_circuit_file(circuit_path), options);
            std::cout << "k " << report.k << "\n"
                      << "worst_location " << report.worst_location << "\n"
                      << "worst_pauli " << report.worst_pauli << "\n"
                      << "multi_fault_min " << report.multi_fault_min << "\n"
                      << "multi_fault_mean " << report.multi_fault_mean << "\n"
                      << "samples " << report.samples << "\n";
            return 0;
        }
        if (*ntraps) {
            std::cout << accredit::n_traps(theta, alpha) << "\n";
            return 0;
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
