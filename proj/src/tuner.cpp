// Copyright 2026 The chaingauge authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#include "chaingauge/tuner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chaingauge/bounds.hpp"
#include "chaingauge/rng.hpp"

namespace chaingauge {

void TunerConfig::check() const {
    if (!(cb_interval.first >= 0.0) || !(cb_interval.first < cb_interval.second) ||
        !(cb_interval.second <= 1.0)) {
        throw std::invalid_argument("TunerConfig: need 0 <= cb lo < cb hi <= 1");
    }
    if (cs_interval.has_value() && !(cs_interval->first < cs_interval->second)) {
        throw std::invalid_argument("TunerConfig: need cs lo < cs hi");
    }
    if (shots_per_step < 1) throw std::invalid_argument("TunerConfig: shots_per_step must be >= 1");
    if (width_tol < 0.0) throw std::invalid_argument("TunerConfig: width_tol must be >= 0");
    if (max_steps < 1) throw std::invalid_argument("TunerConfig: max_steps must be >= 1");
}

TunerTrace binary_search_chain_strength(const EmbeddedModelBuilder& build,
                                        const SamplerFn& sampler, const TunerConfig& config,
                                        const IsingModel* logical_for_default) {
    config.check();

    std::pair<double, double> interval;
    if (config.cs_interval.has_value()) {
        interval = *config.cs_interval;
    } else {
        if (logical_for_default == nullptr) {
            throw std::invalid_argument(
                "binary_search_chain_strength: cs_interval unset and no logical model given");
        }
        interval = {0.0, choi_bound_global(*logical_for_default).magnitude};
        if (!(interval.first < interval.second)) {
            throw std::invalid_argument(
                "binary_search_chain_strength: default interval is empty (weightless model)");
        }
    }
    const double width_tol =
        config.width_tol > 0.0 ? config.width_tol
                               : 1e-3 * (interval.second - interval.first);

    TunerTrace trace;
    trace.initial_interval = interval;

    double best_fallback = std::numeric_limits<double>::infinity();
    double lo = interval.first;
    double hi = interval.second;
    for (int step = 1; step <= config.max_steps; ++step) {
        const double cs = 0.5 * (lo + hi);
        EmbeddedModel em = build(cs);
        SampleSet result = sampler(em.physical, config.shots_per_step,
                                   derive_seed(config.seed, static_cast<std::uint64_t>(step)));
        const double rate = avg_chain_break_rate(result, em);

        if (rate <= config.cb_interval.second && cs < best_fallback) best_fallback = cs;

        if (rate >= config.cb_interval.first && rate <= config.cb_interval.second) {
            trace.steps.push_back({step, cs, rate, lo, hi});
            trace.converged = true;
            trace.final_cs = cs;
            return trace;
        }
        if (rate > config.cb_interval.second) {
            lo = cs;  // chains too weak
        } else {
            hi = cs;  // chains stronger than needed
        }
        trace.steps.push_back({step, cs, rate, lo, hi});
        if (hi - lo < width_tol) break;
    }
    trace.converged = false;
    trace.final_cs = std::isfinite(best_fallback) ? best_fallback : hi;
    return trace;
}

std::vector<ScanRecord> chain_scan(const EmbeddedModelBuilder& build, const SamplerFn& sampler,
                                   const std::vector<double>& cs_list, std::int64_t shots,
                                   const Graph& source, std::uint64_t seed) {
    if (cs_list.empty()) throw std::invalid_argument("chain_scan: cs_list must be non-empty");
    for (double cs : cs_list) {
        if (!(cs > 0.0)) throw std::invalid_argument("chain_scan: magnitudes must be > 0");
    }
    if (shots < 1) throw std::invalid_argument("chain_scan: shots must be >= 1");

    std::vector<ScanRecord> records;
    records.reserve(cs_list.size());
    for (std::size_t i = 0; i < cs_list.size(); ++i) {
        EmbeddedModel em = build(cs_list[i]);
        SampleSet result =
            sampler(em.physical, shots, derive_seed(seed, static_cast<std::uint64_t>(i)));

        ScanRecord record;
        record.cs = cs_list[i];
        record.avg_break_rate = avg_chain_break_rate(result, em);
        record.corruption = coupler_corruption_stats(result, em);

        double weighted_energy = 0.0;
        std::int64_t total = 0;
        for (const Sample& s : result.samples) {
            weighted_energy += s.energy * static_cast<double>(s.occurrences);
            total += s.occurrences;
        }
        record.mean_energy = weighted_energy / static_cast<double>(total);

        result.labels = em.qubit_of;
        std::vector<Assignment> logical =
            unembed(result, em.embedding, derive_seed(seed, 0x5ca1ab1e + i));
        int best = 0;
        for (const Assignment& a : logical) {
            best = std::max(best, cut_size(source, a));
        }
        record.best_cut = best;
        records.push_back(std::move(record));
    }
    return records;
}

double plateau_detect(const std::vector<ScanRecord>& records, double rel_tol) {
    if (records.size() < 3) throw std::invalid_argument("plateau_detect: need >= 3 records");
    if (rel_tol < 0.0) throw std::invalid_argument("plateau_detect: rel_tol must be >= 0");
    int best = 0;
    for (const ScanRecord& r : records) best = std::max(best, r.best_cut);
    const double threshold = static_cast<double>(best) * (1.0 - rel_tol);
    for (const ScanRecord& r : records) {
        if (static_cast<double>(r.best_cut) >= threshold) return r.cs;
    }
    return records.back().cs;  // unreachable: the maximum always qualifies
}

}  // namespace chaingauge
