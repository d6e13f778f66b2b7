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
#include <string>

#include "chaingauge/ising.hpp"
#include "chaingauge/sample_set.hpp"

namespace chaingauge {

// Exact Gibbs sampling enumerates the full state space.
inline constexpr int kGibbsQubitCap = 20;

struct SamplerConfig {
    std::int64_t shots = 128;
    std::uint64_t seed = 0;
    double beta = 1.0;        // Gibbs inverse temperature
    int sweeps = 128;         // Metropolis sweeps per shot
    double beta_hot = 0.1;    // geometric ladder start
    double beta_cold = 10.0;  // geometric ladder end
    int threads = 1;

    void check() const;  // throws std::invalid_argument
};

// i.i.d. draws from p(x) ~ exp(-beta * C(x)) via exact enumeration of the
// partition function. Identical states are aggregated into occurrences.
SampleSet gibbs_sample(const IsingModel& model, double beta, std::int64_t shots,
                       std::uint64_t seed);

// Single-spin-flip Metropolis over a geometric beta ladder, one independent
// restart per shot. Shot i uses a seed derived statelessly from
// (config.seed, i), so results do not depend on the thread count.
SampleSet sa_sample(const IsingModel& model, const SamplerConfig& config);

// Loads a SampleSet JSON file verbatim. When a model is supplied, stored
// energies are recomputed and cross-checked to energy_tol; mismatches and
// occurrence/shot inconsistencies raise data_integrity_error.
SampleSet replay_sample(const std::string& path, const IsingModel* model = nullptr,
                        double energy_tol = 1e-6);

// The pluggable sampler contract: anything mapping (physical model, shots,
// seed) to a SampleSet can drive the tuner and the chain scan.
using SamplerFn =
    std::function<SampleSet(const IsingModel& model, std::int64_t shots, std::uint64_t seed)>;

// SamplerFn adapters with the given fixed parameters.
SamplerFn make_gibbs_sampler(double beta);
SamplerFn make_sa_sampler(const SamplerConfig& base);

}  // namespace chaingauge
