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

#include "chaingauge/graph.hpp"

namespace chaingauge {

// Spins in {-1, +1}, indexed by vertex.
using Assignment = std::vector<int>;

// Ising problem over a source graph: linear weights h_v and quadratic
// weights J_uv in dimensionless energy units. Weights are stored densely;
// a zero entry is the same as an absent one.
struct IsingModel {
    Graph graph;
    std::vector<double> h;  // size graph.num_vertices()
    std::vector<double> j;  // parallel to graph.edges()

    IsingModel() = default;
    explicit IsingModel(Graph g);

    double j_at(int u, int v) const;   // 0 when (u,v) is not an edge
    void set_j(int u, int v, double value);  // throws when (u,v) is not an edge
};

// C(x) = sum_v h_v x_v + sum_(u,v) J_uv x_u x_v
double energy(const IsingModel& model, const Assignment& a);

// Max-cut instance: J_uv = 1 on every edge, h = 0.
IsingModel maxcut_to_ising(const Graph& g);

// Number of edges whose endpoints are assigned opposite spins.
int cut_size(const Graph& g, const Assignment& a);

struct Range {
    double lo = 0.0;
    double hi = 0.0;
};

inline constexpr Range kDefaultHRange{-2.0, 2.0};
inline constexpr Range kDefaultJRange{-1.0, 1.0};

struct ScaledModel {
    IsingModel model;
    double factor = 1.0;
};

// Uniform division of all weights by
//   factor = max(1, max|h|/min(|h_lo|,|h_hi|), max|J|/min(|j_lo|,|j_hi|))
// so the result fits the given working ranges. Scaling is positive and
// uniform, so the ordering of the energy landscape is preserved.
ScaledModel autoscale(const IsingModel& model, Range h_range = kDefaultHRange,
                      Range j_range = kDefaultJRange);

// G(n, p): every pair included independently with probability p.
Graph gen_erdos_renyi(int n, double p, std::uint64_t seed);

// Random d-regular graph via the configuration model, rejecting pairings
// with self-loops or multi-edges.
Graph gen_d_regular(int n, int d, std::uint64_t seed);

// Root mean square of J over the edges of the source graph.
double coupling_rms(const IsingModel& model);

}  // namespace chaingauge
