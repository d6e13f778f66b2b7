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

#include "chaingauge/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <stdexcept>
#include <thread>
#include <vector>

#include "chaingauge/errors.hpp"
#include "chaingauge/json_io.hpp"
#include "chaingauge/rng.hpp"

namespace chaingauge {

void SamplerConfig::check() const {
    if (shots < 1) throw std::invalid_argument("SamplerConfig: shots must be >= 1");
    if (!(beta > 0.0)) throw std::invalid_argument("SamplerConfig: beta must be > 0");
    if (sweeps < 1) throw std::invalid_argument("SamplerConfig: sweeps must be >= 1");
    if (!(beta_hot > 0.0) || !(beta_cold > 0.0)) {
        throw std::invalid_argument("SamplerConfig: beta ladder endpoints must be > 0");
    }
    if (threads < 1) throw std::invalid_argument("SamplerConfig: threads must be >= 1");
}

static double state_energy(const IsingModel& model, std::uint64_t state) {
    double total = 0.0;
    const int n = model.graph.num_vertices();
    for (int v = 0; v < n; ++v) {
        total += model.h[static_cast<std::size_t>(v)] * ((state >> v) & 1ULL ? -1.0 : 1.0);
    }
    const auto& edges = model.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        double su = (state >> edges[i].first) & 1ULL ? -1.0 : 1.0;
        double sv = (state >> edges[i].second) & 1ULL ? -1.0 : 1.0;
        total += model.j[i] * su * sv;
    }
    return total;
}

SampleSet gibbs_sample(const IsingModel& model, double beta, std::int64_t shots,
                       std::uint64_t seed) {
    const int n = model.graph.num_vertices();
    if (n > kGibbsQubitCap) {
        throw resource_limit_error("gibbs_sample: " + std::to_string(n) +
                                   " vertices exceeds cap " + std::to_string(kGibbsQubitCap));
    }
    if (shots < 1) throw std::invalid_argument("gibbs_sample: shots must be >= 1");
    if (beta < 0.0) throw std::invalid_argument("gibbs_sample: beta must be >= 0");

    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<double> energies(count);
    double min_energy = std::numeric_limits<double>::infinity();
    for (std::uint64_t state = 0; state < count; ++state) {
        energies[state] = state_energy(model, state);
        min_energy = std::min(min_energy, energies[state]);
    }
    std::vector<double> cdf(count);
    double acc = 0.0;
    for (std::uint64_t state = 0; state < count; ++state) {
        acc += std::exp(-beta * (energies[state] - min_energy));
        cdf[state] = acc;
    }

    Rng rng(seed);
    std::map<std::uint64_t, std::int64_t> hits;
    for (std::int64_t shot = 0; shot < shots; ++shot) {
        double u = rng.uniform() * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        std::uint64_t state = static_cast<std::uint64_t>(it - cdf.begin());
        if (state >= count) state = count - 1;
        ++hits[state];
    }

    SampleSet out;
    out.shots = shots;
    out.seed = seed;
    for (const auto& [state, occurrences] : hits) {
        Sample s;
        s.spins.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            s.spins[static_cast<std::size_t>(v)] = (state >> v) & 1ULL ? -1 : 1;
        }
        s.energy = energies[state];
        s.occurrences = occurrences;
        out.samples.push_back(std::move(s));
    }
    return out;
}

namespace {

// Flattened adjacency for the Metropolis inner loop.
struct Csr {
    std::vector<int> offsets;
    std::vector<int> nbr;
    std::vector<double> weight;

    explicit Csr(const IsingModel& model) {
        const int n = model.graph.num_vertices();
        std::vector<std::vector<std::pair<int, double>>> lists(static_cast<std::size_t>(n));
        const auto& edges = model.graph.edges();
        for (std::size_t i = 0; i < edges.size(); ++i) {
            lists[static_cast<std::size_t>(edges[i].first)].emplace_back(edges[i].second,
                                                                         model.j[i]);
            lists[static_cast<std::size_t>(edges[i].second)].emplace_back(edges[i].first,
                                                                          model.j[i]);
        }
        offsets.reserve(static_cast<std::size_t>(n) + 1);
        offsets.push_back(0);
        for (const auto& list : lists) {
            for (const auto& [u, w] : list) {
                nbr.push_back(u);
                weight.push_back(w);
            }
            offsets.push_back(static_cast<int>(nbr.size()));
        }
    }
};

Sample run_single_sa_shot(const IsingModel& model, const Csr& csr,
                          const std::vector<double>& betas, std::uint64_t shot_seed) {
    const int n = model.graph.num_vertices();
    Rng rng(shot_seed);
    std::vector<int> spins(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) spins[static_cast<std::size_t>(v)] = rng.spin();

    for (double beta : betas) {
        for (int v = 0; v < n; ++v) {
            double field = model.h[static_cast<std::size_t>(v)];
            for (int i = csr.offsets[static_cast<std::size_t>(v)];
                 i < csr.offsets[static_cast<std::size_t>(v) + 1]; ++i) {
                field += csr.weight[static_cast<std::size_t>(i)] *
                         spins[static_cast<std::size_t>(csr.nbr[static_cast<std::size_t>(i)])];
            }
            double delta = -2.0 * spins[static_cast<std::size_t>(v)] * field;
            if (delta <= 0.0 || rng.uniform() < std::exp(-beta * delta)) {
                spins[static_cast<std::size_t>(v)] = -spins[static_cast<std::size_t>(v)];
            }
        }
    }

    Sample s;
    s.spins = std::move(spins);
    s.energy = energy(model, s.spins);
    s.occurrences = 1;
    return s;
}

}  // namespace

SampleSet sa_sample(const IsingModel& model, const SamplerConfig& config) {
    config.check();
    const int n = model.graph.num_vertices();
    if (n == 0) throw std::invalid_argument("sa_sample: empty model");

    Csr csr(model);
    std::vector<double> betas(static_cast<std::size_t>(config.sweeps));
    if (config.sweeps == 1) {
        betas[0] = config.beta_cold;
    } else {
        const double ratio = config.beta_cold / config.beta_hot;
        for (int t = 0; t < config.sweeps; ++t) {
            betas[static_cast<std::size_t>(t)] =
                config.beta_hot *
                std::pow(ratio, static_cast<double>(t) / static_cast<double>(config.sweeps - 1));
        }
    }

    SampleSet out;
    out.shots = config.shots;
    out.seed = config.seed;
    out.samples.resize(static_cast<std::size_t>(config.shots));

    auto worker = [&](std::int64_t begin, std::int64_t end) {
        for (std::int64_t shot = begin; shot < end; ++shot) {
            out.samples[static_cast<std::size_t>(shot)] = run_single_sa_shot(
                model, csr, betas, derive_seed(config.seed, static_cast<std::uint64_t>(shot)));
        }
    };

    const int threads = static_cast<int>(
        std::min<std::int64_t>(config.threads, config.shots));
    if (threads <= 1) {
        worker(0, config.shots);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        const std::int64_t chunk = (config.shots + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::int64_t begin = t * chunk;
            std::int64_t end = std::min<std::int64_t>(begin + chunk, config.shots);
            if (begin >= end) break;
            pool.emplace_back(worker, begin, end);
        }
        for (auto& th : pool) th.join();
    }
    return out;
}

SampleSet replay_sample(const std::string& path, const IsingModel* model, double energy_tol) {
    SampleSet ss = sampleset_from_json(load_json(path));
    if (ss.total_occurrences() != ss.shots) {
        throw data_integrity_error("replay_sample: occurrences sum to " +
                                   std::to_string(ss.total_occurrences()) + " but shots is " +
                                   std::to_string(ss.shots));
    }
    for (const Sample& s : ss.samples) {
        for (int spin : s.spins) {
            if (spin != 1 && spin != -1) {
                throw data_integrity_error("replay_sample: spins must be +1 or -1");
            }
        }
    }
    if (model != nullptr) {
        const int n = model->graph.num_vertices();
        if (!ss.labels.empty() && static_cast<int>(ss.labels.size()) != n) {
            throw std::invalid_argument(
                "replay_sample: labels do not cover the model's vertex space");
        }
        const std::size_t width = ss.labels.empty() ? static_cast<std::size_t>(n)
                                                    : ss.labels.size();
        for (const Sample& s : ss.samples) {
            if (s.spins.size() != width) {
                throw data_integrity_error("replay_sample: sample size does not match model");
            }
            Assignment a(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) {
                int label = ss.label_of(v);
                if (label < 0 || label >= n) {
                    throw std::invalid_argument(
                        "replay_sample: labels do not match the model's vertex space");
                }
                a[static_cast<std::size_t>(label)] = s.spins[static_cast<std::size_t>(v)];
            }
            double recomputed = energy(*model, a);
            if (std::abs(recomputed - s.energy) > energy_tol) {
                throw data_integrity_error("replay_sample: stored energy deviates from model");
            }
        }
    }
    return ss;
}

SamplerFn make_gibbs_sampler(double beta) {
    return [beta](const IsingModel& model, std::int64_t shots, std::uint64_t seed) {
        return gibbs_sample(model, beta, shots, seed);
    };
}

SamplerFn make_sa_sampler(const SamplerConfig& base) {
    return [base](const IsingModel& model, std::int64_t shots, std::uint64_t seed) {
        SamplerConfig config = base;
        config.shots = shots;
        config.seed = seed;
        return sa_sample(model, config);
    };
}

}  // namespace chaingauge
