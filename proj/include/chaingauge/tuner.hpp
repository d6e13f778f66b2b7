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

#pragma once
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "chaingauge/embedding.hpp"
#include "chaingauge/sampler.hpp"

namespace chaingauge {

// Breaking-chain-rate windows that worked well on specific hardware
// generations. Presets only; the right window depends on the backend's noise
// and must be chosen per sampler.
inline constexpr std::pair<double, double> kAdvantage2CbWindow{6e-3, 2e-2};
inline constexpr std::pair<double, double> kAdvantage64CbWindow{2e-2, 5e-2};

struct TunerConfig {
    std::pair<double, double> cb_interval{0.0, 1.0};  // target break-rate window
    std::optional<std::pair<double, double>> cs_interval;  // chain-strength magnitudes
    std::int64_t shots_per_step = 128;
    double width_tol = 0.0;  // 0 = auto: 1e-3 * initial interval width
    int max_steps = 30;
    std::uint64_t seed = 0;

    void check() const;  // throws std::invalid_argument
};

struct TunerStep {
    int step = 0;        // 1-based
    double cs = 0.0;     // midpoint tried
    double break_rate = 0.0;
    double lo = 0.0;     // interval after the update
    double hi = 0.0;
};

struct TunerTrace {
    std::vector<TunerStep> steps;
    bool converged = false;
    double final_cs = 0.0;
    std::pair<double, double> initial_interval{0.0, 0.0};
};

// Rebuilds the embedded model for a candidate chain strength (re-spreading
// weights and re-applying auto-scale as the caller sees fit).
using EmbeddedModelBuilder = std::function<EmbeddedModel(double cs)>;

// Binary search on the chain strength driven by the average breaking chain
// rate. Each step samples the embedded model at the interval midpoint; a
// rate above the window raises the lower bound (chains too weak), a rate
// below it lowers the upper bound. Convergence means the observed rate landed
// inside the window. When the interval narrows below width_tol or max_steps
// is hit without converging, the result falls back to the smallest tried cs
// whose rate was at or below the window's upper bound (or the final upper
// bound when no step qualified).
//
// When cs_interval is unset it defaults to [0, choi_bound_global(logical)];
// the logical model must then be supplied.
TunerTrace binary_search_chain_strength(const EmbeddedModelBuilder& build,
                                        const SamplerFn& sampler, const TunerConfig& config,
                                        const IsingModel* logical_for_default = nullptr);

struct ScanRecord {
    double cs = 0.0;
    int best_cut = 0;
    double mean_energy = 0.0;
    double avg_break_rate = 0.0;
    CorruptionStats corruption;
};

// Baseline chain scan: samples every magnitude in cs_list with the given
// shot budget and records the best majority-vote cut, the mean sampled
// energy, the average breaking chain rate and corruption statistics.
std::vector<ScanRecord> chain_scan(const EmbeddedModelBuilder& build, const SamplerFn& sampler,
                                   const std::vector<double>& cs_list, std::int64_t shots,
                                   const Graph& source, std::uint64_t seed);

// Smallest scanned cs whose best cut lies within rel_tol of the maximum over
// the scan.
double plateau_detect(const std::vector<ScanRecord>& records, double rel_tol);

}  // namespace chaingauge
