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

#include "accredit/accreditor.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "accredit/rng.h"
#include "accredit/trap_factory.h"
#include "json_util.h"

namespace accredit {

namespace {

enum Stream : std::uint64_t { PLAN = 0, GENERATE = 1, EXECUTE = 2, DETECT = 3 };

}  // namespace

AccreditationPlan plan_accreditation(std::size_t n_l, std::uint64_t seed) {
    if (n_l == 0) {
        throw std::invalid_argument("plan needs at least one true trap.");
    }
    Rng rng(seed);
    AccreditationPlan plan;
    plan.n_l = n_l;
    plan.n_tt = std::uniform_int_distribution<std::size_t>(0, 10 * n_l - 1)(rng);

    std::size_t n_traps_total = n_l + plan.n_tt;
    std::vector<std::size_t> traps(n_traps_total);
    std::iota(traps.begin(), traps.end(), 1);
    std::shuffle(traps.begin(), traps.end(), rng);
    plan.true_trap.assign(n_traps_total + 1, false);
    for (std::size_t i = 0; i < n_l; i++) {
        plan.true_trap[traps[i]] = true;
    }

    plan.order.resize(n_traps_total + 1);
    std::iota(plan.order.begin(), plan.order.end(), 0);
    std::shuffle(plan.order.begin(), plan.order.end(), rng);
    plan.target_position =
        static_cast<std::size_t>(std::find(plan.order.begin(), plan.order.end(), 0) - plan.order.begin());
    return plan;
}

AccreditationResult accredit_with_plan(const Circuit &c, const AccreditationConfig &cfg, const AccreditationPlan &plan,
                                       AdversaryStrategy &adversary, std::uint64_t seed,
                                       const AccreditationHooks &hooks) {
    validate_config(cfg);
    if (!cfg.k) {
        throw std::invalid_argument("accredit_with_plan needs cfg.k.");
    }
    if (plan.order.size() != plan.batch_size() || plan.true_trap.size() != plan.batch_size()) {
        throw std::invalid_argument("inconsistent accreditation plan.");
    }

    AccreditationResult result;
    result.config = cfg;
    result.n_l = plan.n_l;
    result.n_tt = plan.n_tt;

    Rng gen(derive_seed(seed, GENERATE));
    std::vector<GeneratedCircuit> circuits;
    circuits.reserve(plan.batch_size());
    circuits.push_back(generate_target(c, gen));
    for (std::size_t i = 1; i < plan.batch_size(); i++) {
        circuits.push_back(generate_trap(c, gen));
    }

    std::vector<GeneratedCircuit> batch;
    batch.reserve(plan.batch_size());
    for (std::size_t index : plan.order) {
        batch.push_back(circuits[index]);
    }

    ExecutionObserver observer = [&](std::size_t position, const CptpList &list, const ExecutionRecord &record) {
        if (hooks.observer) {
            hooks.observer(position, list, record);
        }
        if (position == plan.target_position && hooks.on_target_execution) {
            hooks.on_target_execution(batch[position], list);
        }
    };
    ProtocolTranscript transcript =
        run_execution_protocol(batch, adversary, cfg.beta, derive_seed(seed, EXECUTE), observer);
    result.transcript_digest = transcript.digest();
    if (transcript.aborted) {
        result.aborted = true;
        result.abort_reason = transcript.abort_reason;
        result.abort_detail = transcript.abort_detail;
        return result;
    }

    BitString m = trap_output(c.num_qubits);
    for (std::size_t pos = 0; pos < batch.size(); pos++) {
        std::size_t index = plan.order[pos];
        BitString decrypted = decrypt_outputs(*transcript.entries[pos].encrypted_outcome, batch[pos].key);
        if (index == 0) {
            result.targ_result = decrypted;
        } else if (plan.true_trap[index]) {
            result.trap_stats.n_true_traps++;
            result.trap_stats.n_flagged += decrypted == m ? 0 : 1;
        }
    }
    result.bound = variation_bound(result.trap_stats, cfg);
    return result;
}

AccreditationResult accredit(const Circuit &c, const AccreditationConfig &cfg, AdversaryStrategy &adversary,
                             std::uint64_t seed, const AccreditationHooks &hooks) {
    validate_config(cfg);
    AccreditationConfig effective = cfg;
    if (!effective.k) {
        DetectionOptions options;
        options.seed = derive_seed(seed, DETECT);
        double k = estimate_detection_rate(c, options).k;
        if (!(k > 0)) {
            throw std::runtime_error("measured trap detection rate is zero; no bound can be certified.");
        }
        effective.k = k;
    }
    AccreditationPlan plan = plan_accreditation(n_traps(cfg.theta, cfg.alpha), derive_seed(seed, PLAN));
    return accredit_with_plan(c, effective, plan, adversary, seed, hooks);
}

std::string serialize_result(const AccreditationResult &result) {
    using detail::json;
    json out{
        {"aborted", result.aborted},
        {"abort_reason", abort_reason_str(result.abort_reason)},
        {"abort_detail", result.abort_detail},
        {"theta", result.config.theta},
        {"alpha", result.config.alpha},
        {"beta", result.config.beta},
        {"factor_mode", factor_mode_str(result.config.factor_mode)},
        {"n_l", result.n_l},
        {"n_tt", result.n_tt},
        {"n_true_traps", result.trap_stats.n_true_traps},
        {"n_flagged", result.trap_stats.n_flagged},
        {"transcript_digest", result.transcript_digest},
    };
    out["k"] = result.config.k ? json(*result.config.k) : json(nullptr);
    out["targ_result"] = result.targ_result ? json(result.targ_result->str()) : json(nullptr);
    out["bound"] = result.bound ? json(*result.bound) : json(nullptr);
    out["v_bar"] = result.trap_stats.n_true_traps ? json(result.trap_stats.v_bar()) : json(nullptr);
    return out.dump(2);
}

}  // namespace accredit
