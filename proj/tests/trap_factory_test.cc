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

#include "accredit/trap_factory.h"

#include <gtest/gtest.h>

#include "accredit/pauli.h"
#include "accredit/simulator.h"
#include "test_util.h"

using namespace accredit;
using accredit::testing::load_testdata;
using accredit::testing::random_circuit;

namespace {

// Same circuit under a different key: extra X gates folded into the final slots.
Circuit rekey(const GeneratedCircuit &g, const BitString &key) {
    Circuit c = g.circuit;
    auto &last = std::get<SingleQubitLayer>(c.layers.back());
    for (std::size_t q = 0; q < c.num_qubits; q++) {
        if (key[q] != g.key[q]) {
            last.slots[q] = compose(last.slots[q], SlotGate::named(GateName::X));
        }
    }
    return c;
}

std::vector<Circuit> skeleton_circuits() {
    std::vector<Circuit> out{load_testdata("single_x.json"), load_testdata("bell.json"),
                             load_testdata("three_qubit_three_layer.json")};
    Rng rng(99);
    out.push_back(random_circuit(3, 2, rng));
    out.push_back(random_circuit(2, 1, rng));
    return out;
}

}  // namespace

TEST(GenerateTarget, PreservesNoiselessDistributionUpToKey) {
    Rng rng(1);
    for (int i = 0; i < 20; i++) {
        Circuit c = random_circuit(1 + rng() % 3, rng() % 3, rng);
        auto ideal = output_distribution(c);
        GeneratedCircuit target = generate_target(c, rng);
        EXPECT_TRUE(target.is_target);
        EXPECT_EQ(redact_circuit(target.circuit), redact_circuit(c));
        auto compiled = output_distribution(target.circuit);
        for (std::uint32_t b = 0; b < (1u << c.num_qubits); b++) {
            EXPECT_NEAR(compiled.probs()[b ^ target.key.bits()], ideal.probs()[b], 1e-10);
        }
        auto zero_key = output_distribution(rekey(target, BitString::zeros(c.num_qubits)));
        EXPECT_LT(variation_distance(zero_key, ideal), 1e-10);
    }
}

TEST(GenerateTarget, KeyBitFlipsThatQubitsMarginal) {
    Circuit c = load_testdata("bell.json");
    std::get<SingleQubitLayer>(c.layers[0]).slots[1] = SlotGate::named(GateName::X);
    GeneratedCircuit t = generate_target(c, 5);
    Circuit flipped = rekey(t, BitString::from_string("01"));
    auto base = output_distribution(rekey(t, BitString::zeros(2)));
    auto out = output_distribution(flipped);
    for (std::uint32_t b = 0; b < 4; b++) {
        EXPECT_NEAR(out.probs()[b ^ 2u], base.probs()[b], 1e-12);
    }
}

TEST(GenerateTrap, NoiselessTrapDecryptsToM) {
    Rng rng(2);
    for (int i = 0; i < 30; i++) {
        Circuit c = random_circuit(1 + rng() % 4, rng() % 4, rng);
        GeneratedCircuit trap = generate_trap(c, rng);
        EXPECT_FALSE(trap.is_target);
        EXPECT_EQ(redact_circuit(trap.circuit), redact_circuit(c));
        auto d = output_distribution(trap.circuit);
        EXPECT_NEAR(d.probability(trap.key), 1, 1e-10);
        EXPECT_EQ(decrypt_outputs(trap.key, trap.key), trap_output(c.num_qubits));
    }
}

TEST(GenerateTrap, DeterministicFromSeed) {
    Circuit c = load_testdata("three_qubit_three_layer.json");
    auto a = generate_trap(c, 42);
    auto b = generate_trap(c, 42);
    EXPECT_EQ(a.circuit, b.circuit);
    EXPECT_EQ(a.key, b.key);
}

TEST(OneTimePad, KeyAveragedOutputIsUniform) {
    Rng rng(3);
    Circuit c = load_testdata("three_qubit_three_layer.json");
    CptpList list = accredit::testing::random_list(c, 0.2, rng);
    for (bool trap : {true, false}) {
        GeneratedCircuit g = trap ? generate_trap(c, rng) : generate_target(c, rng);
        std::vector<double> avg(8, 0);
        for (std::uint32_t k = 0; k < 8; k++) {
            auto d = output_distribution(rekey(g, BitString(3, k)), list);
            for (std::size_t b = 0; b < 8; b++) {
                avg[b] += d.probs()[b] / 8;
            }
        }
        for (double p : avg) {
            EXPECT_NEAR(p, 1.0 / 8, 1e-9);
        }
    }
}

TEST(TrivialFaults, Classification) {
    Circuit c = load_testdata("bell.json");
    auto skeleton = redact_circuit(c);
    auto locs = error_locations(skeleton);
    std::size_t z = static_cast<std::size_t>(Pauli::Z);
    std::size_t x = static_cast<std::size_t>(Pauli::X);
    EXPECT_TRUE(is_trivial_fault(skeleton, locs.front(), z));
    EXPECT_FALSE(is_trivial_fault(skeleton, locs.front(), x));
    EXPECT_TRUE(is_trivial_fault(skeleton, locs.back(), z));
    for (const auto &loc : locs) {
        if (loc.arity() == 2) {
            EXPECT_FALSE(is_trivial_fault(skeleton, loc, 15));
        }
        if (loc.kind == LocationKind::AFTER_GATE && loc.layer == 0) {
            EXPECT_FALSE(is_trivial_fault(skeleton, loc, z));
        }
    }
}

TEST(DetectionRate, PreMeasurementXAlwaysDetected) {
    Circuit c = load_testdata("three_qubit_three_layer.json");
    auto report = estimate_detection_rate(c, DetectionOptions{200, 8, 1});
    auto locs = error_locations(c);
    for (std::size_t l = 0; l < locs.size(); l++) {
        if (locs[l].kind == LocationKind::PRE_MEASUREMENT) {
            EXPECT_DOUBLE_EQ(report.rates[l][static_cast<std::size_t>(Pauli::X)], 1.0);
        }
        EXPECT_EQ(report.rates[l][0], -1.0);
    }
}

TEST(DetectionRate, NoFaultNeverDetected) {
    Circuit c = load_testdata("bell.json");
    for (std::uint64_t s = 0; s < 50; s++) {
        GeneratedCircuit trap = generate_trap(c, s);
        std::vector<std::uint8_t> none(error_locations(c).size(), 0);
        EXPECT_NEAR(faulted_distribution(trap.circuit, none).probability(trap.key), 1, 1e-12);
    }
}

TEST(DetectionRate, PositiveOnEveryTestSkeleton) {
    for (const auto &c : skeleton_circuits()) {
        auto report = estimate_detection_rate(c, DetectionOptions{500, 16, 2});
        EXPECT_GT(report.k, 0);
        EXPECT_LE(report.k, 1);
    }
}

TEST(DetectionRate, AgreesWithStatevectorInjection) {
    // Independent oracle: inject each fault into fresh traps and simulate.
    Circuit c = load_testdata("bell.json");
    auto skeleton = redact_circuit(c);
    auto locs = error_locations(c);
    const std::size_t n = 2000;
    auto report = estimate_detection_rate(c, DetectionOptions{n, 0, 3});
    for (std::size_t l = 0; l < locs.size(); l++) {
        for (std::size_t p = 1; p < num_pauli_strings(locs[l].arity()); p++) {
            if (is_trivial_fault(skeleton, locs[l], p)) {
                continue;
            }
            double detected = 0;
            for (std::size_t s = 0; s < n; s++) {
                GeneratedCircuit trap = generate_trap(c, derive_seed(777, s));
                std::vector<std::uint8_t> pattern(locs.size(), 0);
                pattern[l] = static_cast<std::uint8_t>(p);
                detected += 1 - faulted_distribution(trap.circuit, pattern).probability(trap.key);
            }
            double rate = detected / n;
            double sigma = std::sqrt(0.25 / n);
            EXPECT_NEAR(rate, report.rates[l][p], 6 * sigma) << "location " << l << " pauli " << p;
        }
    }
}

TEST(DetectionRate, NonCliffordGeneratorUsesStatevector) {
    Circuit c = load_testdata("bell.json");
    TrapGenerator with_rotation = [](const Circuit &x, std::uint64_t seed) {
        GeneratedCircuit g = generate_trap(x, seed);
        // A Z rotation right before measurement changes no outcome but makes
        // the slot non-Clifford.
        auto &slot = std::get<SingleQubitLayer>(g.circuit.layers.back()).slots[0];
        Eigen::Matrix2cd rz = Eigen::Matrix2cd::Identity();
        rz(1, 1) = std::polar(1.0, 0.3);
        slot = SlotGate::from_matrix(rz * slot.matrix);
        return g;
    };
    auto a = estimate_detection_rate(c, DetectionOptions{200, 4, 9}, with_rotation);
    auto b = estimate_detection_rate(c, DetectionOptions{200, 4, 9});
    EXPECT_NEAR(a.k, b.k, 1e-9);
    EXPECT_NEAR(a.multi_fault_mean, b.multi_fault_mean, 1e-9);
}

TEST(DetectionRate, ZeroSamplesRejected) {
    EXPECT_THROW(estimate_detection_rate(load_testdata("bell.json"), DetectionOptions{0, 0, 0}), std::invalid_argument);
}
