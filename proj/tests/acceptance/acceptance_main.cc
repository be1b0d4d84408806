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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. Criteria can be selected by number on
// the command line, e.g. `acceptance 1 2 4`.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "accredit/accreditor.h"
#include "accredit/adversaries.h"
#include "accredit/channel.h"
#include "accredit/harness.h"
#include "accredit/parties.h"
#include "accredit/simulator.h"
#include "accredit/stats.h"
#include "accredit/trap_factory.h"
#include "protocol_util.h"
#include "stat_util.h"
#include "test_util.h"

using namespace accredit;
using accredit::testing::load_testdata;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char *format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof(buf), format, args...);
    return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

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

Outcome worked_example() {
    auto start = std::chrono::steady_clock::now();
    Circuit c = accredit::testing::one_slot_circuit(GateName::X);
    CptpList list{{NoiseChannel::bit_flip(0.5), NoiseChannel::bit_flip((1 + 0.01) / 2),
                   NoiseChannel::bit_flip((1 - 0.01) / 2)}};
    double p = execution_error_probability(list, c);
    double t = seconds_since(start);
    bool ok = std::abs(p - 0.8750125) <= 1e-12 && t < 1;
    return {ok, fmt("error probability %.15f (target 0.8750125, tol 1e-12), %.3fs (< 1s)", p, t)};
}

Outcome formula_exactness() {
    using boost::multiprecision::cpp_bin_float_50;
    auto oracle = [](const char *theta, const char *alpha) {
        cpp_bin_float_50 th(theta);
        cpp_bin_float_50 al(alpha);
        return static_cast<std::size_t>(ceil((2 / (th * th)) * log(2 / (1 - al)))) + 1;
    };
    std::size_t a = n_traps(0.1, 0.95);
    std::size_t b = n_traps(0.2, 0.95);
    std::size_t oa = oracle("0.1", "0.95");
    std::size_t ob = oracle("0.2", "0.95");
    bool ok = a == 739 && b == 186 && a == oa && b == ob;
    return {ok, fmt("n_traps(0.1,0.95)=%zu (oracle %zu, expect 739), n_traps(0.2,0.95)=%zu (oracle %zu, expect 186)",
                    a, oa, b, ob)};
}

Outcome bound_chain() {
    auto start = std::chrono::steady_clock::now();
    Rng rng(2024);
    std::size_t violations = 0;
    double worst_slack = 1;
    const std::size_t pairs = 200;
    for (std::size_t i = 0; i < pairs; i++) {
        std::size_t n = 1 + rng() % 5;
        Circuit c = accredit::testing::random_circuit(n, rng() % 4, rng);
        double strength = std::uniform_real_distribution<double>(0, 0.3)(rng);
        CptpList list = accredit::testing::random_list(c, strength, rng);
        double nu = variation_distance(output_distribution(c, list), output_distribution(c));
        double p = execution_error_probability(list, c);
        worst_slack = std::min(worst_slack, p - nu);
        violations += nu <= p + 1e-9 ? 0 : 1;
    }
    double t = seconds_since(start);
    return {violations == 0 && t < 120,
            fmt("%zu/%zu pairs with nu > P_err + 1e-9, min(P_err - nu) = %.3g, %.1fs (< 120s)", violations, pairs,
                worst_slack, t)};
}

Outcome interval_lemma() {
    using boost::multiprecision::cpp_rational;
    auto start = std::chrono::steady_clock::now();
    Rng rng(77);
    std::uniform_real_distribution<double> unit(0, 1);
    std::size_t violations = 0;
    std::size_t approx_over_allowance = 0;
    double worst_ratio = 0;
    const std::size_t instances = 100000;
    for (std::size_t i = 0; i < instances; i++) {
        double beta = 0.5 * unit(rng);
        double p0 = 0.8 / (1 + beta) * (1 - unit(rng));
        cpp_rational b(beta);
        cpp_rational P0(p0);
        cpp_rational lo = P0 * (1 - b);
        cpp_rational hi = P0 * (1 + b);
        auto draw = [&] {
            // Endpoints are drawn deliberately often: they are the extremal cases.
            double u = unit(rng);
            if (u < 0.1) {
                return lo;
            }
            if (u > 0.9) {
                return hi;
            }
            return cpp_rational(lo + (hi - lo) * cpp_rational(unit(rng)));
        };
        std::size_t n = 1 + rng() % 16;
        cpp_rational sum = 0;
        for (std::size_t k = 0; k < n; k++) {
            sum += draw();
        }
        cpp_rational avg = sum / n;
        cpp_rational y = draw();
        if (y * (1 - b) > (1 + b) * avg) {
            violations++;
        }
        cpp_rational overshoot = y - (1 + 2 * b) * avg;
        cpp_rational allowance = 2 * b * b * P0 / (1 - b);
        if (overshoot > allowance) {
            approx_over_allowance++;
        }
        if (overshoot > 0 && allowance > 0) {
            worst_ratio = std::max(worst_ratio, static_cast<double>(overshoot / allowance));
        }
    }
    double t = seconds_since(start);
    return {violations == 0 && approx_over_allowance == 0 && t < 30,
            fmt("exact-mode violations %zu/%zu; paper-approx overshoot above 2b^2P0/(1-b): %zu, worst "
                "overshoot/allowance %.4f; %.1fs (< 30s)",
                violations, instances, approx_over_allowance, worst_ratio, t)};
}

Outcome soundness() {
    auto start = std::chrono::steady_clock::now();
    const std::size_t runs = 500;
    const double threshold = 0.9 - 3 * std::sqrt(0.09 / runs);
    bool ok = true;
    std::string detail;
    for (const char *name : {"iid", "drift", "adaptive", "targeted"}) {
        ExperimentConfig cfg;
        cfg.circuit = load_testdata("three_qubit_three_layer.json");
        cfg.theta = 0.15;
        cfg.alpha = 0.9;
        cfg.beta = 0.1;
        cfg.adversary = name;
        cfg.p0 = 0.1;
        cfg.runs = runs;
        cfg.seed = 1000;
        auto report = run_soundness_experiment(cfg);
        const auto &s = report.summary;
        double max_nu = 0;
        for (const auto &row : report.rows) {
            max_nu = std::max(max_nu, row.aborted ? 0.0 : row.true_nu);
        }
        bool pass = s.aborts == 0 && s.coverage >= threshold;
        ok = ok && pass;
        detail += fmt("%s coverage %.3f (k %.3f, mean bound %.3f, max nu %.4f, aborts %zu); ", name, s.coverage, s.k,
                      s.mean_bound, max_nu, s.aborts);
    }
    double t = seconds_since(start);
    ok = ok && t < 1800;
    detail += fmt("threshold %.4f, %.0fs (< 1800s)", threshold, t);
    return {ok, detail};
}

Outcome one_time_pad() {
    Circuit c = load_testdata("three_qubit_three_layer.json");
    Rng rng(6);
    CptpList list = accredit::testing::random_list(c, 0.2, rng);
    double worst = 0;
    for (int i = 0; i < 5; i++) {
        GeneratedCircuit trap = generate_trap(c, rng);
        for (const CptpList *l : {static_cast<const CptpList *>(nullptr), static_cast<const CptpList *>(&list)}) {
            std::vector<double> avg(8, 0);
            for (std::uint32_t k = 0; k < 8; k++) {
                Circuit keyed = rekey(trap, BitString(3, k));
                auto d = l ? output_distribution(keyed, *l) : output_distribution(keyed);
                for (std::size_t b = 0; b < 8; b++) {
                    avg[b] += d.probs()[b] / 8;
                }
            }
            for (double p : avg) {
                worst = std::max(worst, std::abs(p - 0.125));
            }
        }
    }
    return {worst <= 1e-9, fmt("max |P(encrypted = x) - 1/8| = %.3g over 5 traps, noiseless and noisy (tol 1e-9)", worst)};
}

Outcome enforcement() {
    Circuit c = load_testdata("three_qubit_three_layer.json");
    Rng rng(8);
    std::uniform_real_distribution<double> unit(0, 1);
    const std::size_t trials = 2000;
    std::size_t aborted_before_execution = 0;
    for (std::size_t i = 0; i < trials; i++) {
        double beta = 0.5 * unit(rng);
        double p0 = 0.01 + (0.79 / (1 + beta) - 0.01) * unit(rng);
        double lo = p0 * (1 - beta);
        double hi = p0 * (1 + beta);
        double margin = i % 4 == 0 ? 1e-6 : 1e-6 + 0.05 * unit(rng);
        bool below = (i % 2 == 0) && lo - margin > 0;
        double bad = below ? lo - margin : std::min(hi + margin, 0.999);
        std::size_t bad_index = rng() % 5;
        bool concentrated = rng() % 2 == 0;
        accredit::testing::ScriptedAdversary adversary(
            SpsclDeclaration{p0, beta}, [&](const std::vector<ErrorLocation> &locs, std::size_t index) {
                double p = index == bad_index ? bad : p0;
                return concentrated ? concentrated_list(locs, p, LocationKind::AFTER_GATE, Pauli::Y)
                                    : spread_depolarizing_list(locs, p);
            });
        Rng gen(derive_seed(9, i));
        std::vector<GeneratedCircuit> batch;
        for (int j = 0; j < 6; j++) {
            batch.push_back(generate_trap(c, gen));
        }
        std::size_t executed = 0;
        auto t = run_execution_protocol(batch, adversary, beta, i,
                                        [&](std::size_t, const CptpList &, const ExecutionRecord &) { executed++; });
        bool ok = t.aborted && t.abort_reason == AbortReason::OUTSIDE_DECLARED_SPSCL && executed == bad_index &&
                  t.entries.size() == bad_index + 1 && !t.entries.back().encrypted_outcome;
        aborted_before_execution += ok ? 1 : 0;
    }
    return {aborted_before_execution == trials,
            fmt("%zu/%zu out-of-interval submissions (margin >= 1e-6) aborted before execution",
                aborted_before_execution, trials)};
}

Outcome adaptive_futility() {
    Circuit c = load_testdata("three_qubit_three_layer.json");
    const std::size_t runs = 10000;
    const std::size_t size = 10;
    std::vector<double> real(size + 1, 0);
    std::vector<double> control(size + 1, 0);
    auto flagged = [&](const std::vector<GeneratedCircuit> &batch, const ProtocolTranscript &t) {
        std::size_t count = 0;
        for (std::size_t i = 0; i < batch.size(); i++) {
            count += decrypt_outputs(*t.entries[i].encrypted_outcome, batch[i].key).is_zero() ? 0 : 1;
        }
        return count;
    };
    for (std::size_t r = 0; r < runs; r++) {
        Rng gen(derive_seed(10, r));
        std::vector<GeneratedCircuit> batch;
        for (std::size_t j = 0; j < size; j++) {
            batch.push_back(generate_trap(c, gen));
        }
        auto adaptive = make_adversary("adaptive", AdversaryParams{0.3, r});
        real[flagged(batch, run_execution_protocol(batch, *adaptive, 0.5, derive_seed(11, r)))]++;
        accredit::testing::RandomFedAdversary fed(make_adversary("adaptive", AdversaryParams{0.3, r}),
                                                  derive_seed(12, r));
        control[flagged(batch, run_execution_protocol(batch, fed, 0.5, derive_seed(13, r)))]++;
    }
    double p = accredit::testing::chi_squared_homogeneity_p(real, control);
    double mean_real = 0;
    double mean_control = 0;
    for (std::size_t i = 0; i <= size; i++) {
        mean_real += static_cast<double>(i) * real[i] / runs;
        mean_control += static_cast<double>(i) * control[i] / runs;
    }
    return {p > 0.01, fmt("chi^2 homogeneity p = %.4f (> 0.01) over %zu batches of %zu traps; mean flagged %.4f vs "
                          "%.4f",
                          p, runs, size, mean_real, mean_control)};
}

Outcome trap_certification() {
    std::vector<std::pair<std::string, Circuit>> skeletons{
        {"single_x", load_testdata("single_x.json")},
        {"bell", load_testdata("bell.json")},
        {"three_qubit_three_layer", load_testdata("three_qubit_three_layer.json")},
    };
    Rng rng(55);
    for (int i = 0; i < 3; i++) {
        skeletons.emplace_back("random" + std::to_string(i),
                               accredit::testing::random_circuit(2 + i % 2, 1 + i, rng));
    }
    bool ok = true;
    std::string detail;
    const std::size_t oracle_traps = 2000;
    for (const auto &[name, c] : skeletons) {
        auto report = estimate_detection_rate(c, DetectionOptions{1000, 64, 5});
        auto skeleton = redact_circuit(c);
        auto locs = error_locations(c);
        std::vector<GeneratedCircuit> traps;
        for (std::size_t s = 0; s < oracle_traps; s++) {
            traps.push_back(generate_trap(c, derive_seed(4242, s)));
        }
        double worst = 1;
        double tol = 3 * std::sqrt(report.k * (1 - report.k) / oracle_traps);
        std::size_t below = 0;
        for (std::size_t l = 0; l < locs.size(); l++) {
            for (std::size_t p = 1; p < num_pauli_strings(locs[l].arity()); p++) {
                if (is_trivial_fault(skeleton, locs[l], p)) {
                    continue;
                }
                std::vector<std::uint8_t> pattern(locs.size(), 0);
                pattern[l] = static_cast<std::uint8_t>(p);
                double detected = 0;
                for (const auto &trap : traps) {
                    detected += 1 - faulted_distribution(trap.circuit, pattern).probability(trap.key);
                }
                double rate = detected / oracle_traps;
                worst = std::min(worst, rate);
                below += rate >= report.k - tol ? 0 : 1;
            }
        }
        bool pass = report.k > 0 && below == 0;
        ok = ok && pass;
        detail += fmt("%s k=%.3f min injected=%.3f%s; ", name.c_str(), report.k, worst, below ? " BELOW" : "");
    }
    detail += fmt("statevector oracle over %zu fresh traps, 3-sigma slack", oracle_traps);
    return {ok, detail};
}

}  // namespace

int main(int argc, char **argv) {
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"worked example error probability", worked_example},
        {"trap count formula", formula_exactness},
        {"bound chain nu <= P_err", bound_chain},
        {"interval bound", interval_lemma},
        {"soundness Monte Carlo", soundness},
        {"one-time-pad uniformity", one_time_pad},
        {"enforcement aborts", enforcement},
        {"adaptive futility", adaptive_futility},
        {"trap certification", trap_certification},
    };
    std::set<int> selected;
    for (int i = 1; i < argc; i++) {
        selected.insert(std::atoi(argv[i]));
    }
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); i++) {
        int number = static_cast<int>(i) + 1;
        if (!selected.empty() && !selected.count(number)) {
            continue;
        }
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", number, criteria[i].first.c_str(), o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
