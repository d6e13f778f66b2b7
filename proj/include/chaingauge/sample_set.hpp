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
#include <vector>

#include "chaingauge/ising.hpp"

namespace chaingauge {

struct Sample {
    Assignment spins;
    double energy = 0.0;
    std::int64_t occurrences = 1;
};

// Seeded sampler output. Spins live in the sampled model's vertex space;
// `labels[i]` carries the external id of vertex i (physical qubit ids when
// the sampled model was an embedded one). An empty label vector means the
// identity labelling.
struct SampleSet {
    std::vector<Sample> samples;
    std::int64_t shots = 0;
    std::uint64_t seed = 0;
    std::vector<int> labels;

    std::int64_t total_occurrences() const {
        std::int64_t total = 0;
        for (const Sample& s : samples) total += s.occurrences;
        return total;
    }

    int label_of(int vertex) const {
        return labels.empty() ? vertex : labels[static_cast<std::size_t>(vertex)];
    }
};

}  // namespace chaingauge
