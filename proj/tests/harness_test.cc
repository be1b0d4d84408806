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

#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>
#include "test_util.h"

using namespace accredit;
using accredit::testing::load_testdata;

namespace {

ExperimentConfig quick(const std::string &adversary, std::size_t runs) {
    ExperimentConfig cfg;
    cfg.circuit = load_testdata("three_qubit_three_layer.json");
    cfg.theta = 0.5;
    cfg.alpha = 0.6;
    cfg.beta = 0.1;
    cfg.adversary = adversary;
    cfg.p0 = 0.1;
    cfg.runs = runs;
    cfg.seed = 40;
    cfg.k = 0.3;
    return cfg;
}

std::string csv(const ExperimentReport &report) {
    std::ostringstream out;
    write_csv(report, out);
    return out.str();
}

}  // namespace

TEST(Harness, ZeroRuns) {
    auto report = run_soundness_experiment(quick("iid", 0));
    EXPECT_TRUE(report.rows.empty());
    EXPECT_EQ(report.summary.runs, 0u);
    EXPECT_EQ(report.summary.aborts, 0u);
    EXPECT_EQ(report.summary.covered, 0u);
    EXPECT_EQ(csv(report), "run,seed,n_l,n_tt,v_bar,bound,true_nu,covered,aborted\n");
}

TEST(Harness, ReplayIsBitIdentical) {
    auto a = run_soundness_experiment(quick("adaptive", 6));
    auto b = run_soundness_experiment(quick("adaptive", 6));
    EXPECT_EQ(csv(a), csv(b));
    EXPECT_EQ(serialize_summary(a.summary), serialize_summary(b.summary));
    for (std::size_t i = 0; i < a.rows.size(); i++) {
        EXPECT_EQ(a.rows[i].seed, 40 + i);
    }
}

TEST(Harness, CheatAlwaysAborts) {
    auto report = run_soundness_experiment(quick("cheat", 5));
    EXPECT_EQ(report.summary.aborts, 5u);
    for (const auto &row : report.rows) {
        EXPECT_TRUE(row.aborted);
        EXPECT_TRUE(std::isnan(row.bound));
        EXPECT_FALSE(row.covered);
    }
    EXPECT_TRUE(std::isnan(report.summary.coverage));
    auto j = nlohmann::json::parse(serialize_summary(report.summary));
    EXPECT_TRUE(j["coverage"].is_null());
    EXPECT_EQ(j["aborts"], 5);
}

TEST(Harness, SummaryMatchesRows) {
    auto report = run_soundness_experiment(quick("targeted", 8));
    std::size_t covered = 0;
    double bound_total = 0;
    for (const auto &row : report.rows) {
        EXPECT_FALSE(row.aborted);
        EXPECT_GE(row.true_nu, 0);
        EXPECT_LE(row.true_nu, 1);
        EXPECT_EQ(row.covered, row.true_nu <= row.bound);
        covered += row.covered ? 1 : 0;
        bound_total += row.bound;
    }
    EXPECT_EQ(report.summary.covered, covered);
    EXPECT_DOUBLE_EQ(report.summary.coverage, static_cast<double>(covered) / 8);
    EXPECT_DOUBLE_EQ(report.summary.mean_bound, bound_total / 8);
    EXPECT_EQ(report.summary.k, 0.3);
}

TEST(Harness, TrueNuIsPositiveUnderNoise) {
    auto report = run_soundness_experiment(quick("iid", 3));
    for (const auto &row : report.rows) {
        EXPECT_GT(row.true_nu, 1e-4);
        EXPECT_LE(row.true_nu, 0.1 + 1e-9);
    }
}

TEST(Harness, MeasuresKOnceWhenUnset) {
    auto cfg = quick("iid", 2);
    cfg.k.reset();
    cfg.detection_samples = 200;
    auto report = run_soundness_experiment(cfg);
    EXPECT_GT(report.summary.k, 0);
    EXPECT_LE(report.summary.k, 1);
}

TEST(Harness, Errors) {
    EXPECT_THROW(run_soundness_experiment(quick("unknown", 1)), std::invalid_argument);
    auto bad = quick("iid", 1);
    bad.alpha = 1.2;
    EXPECT_THROW(run_soundness_experiment(bad), std::invalid_argument);
    auto bad_circuit = quick("iid", 1);
    bad_circuit.circuit.num_qubits = 0;
    EXPECT_THROW(run_soundness_experiment(bad_circuit), std::invalid_argument);
}
