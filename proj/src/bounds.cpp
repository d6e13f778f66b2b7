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

#include "chaingauge/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace chaingauge {

double choi_bound_node(const IsingModel& model, int v) {
    if (v < 0 || v >= model.graph.num_vertices()) {
        throw std::invalid_argument("choi_bound_node: unknown vertex");
    }
    double bound = std::abs(model.h[static_cast<std::size_t>(v)]);
    for (int u : model.graph.neighbors(v)) {
        bound += std::abs(model.j_at(u, v));
    }
    return bound;
}

BoundResult choi_bound_global(const IsingModel& model) {
    if (model.graph.num_vertices() == 0) {
        throw std::invalid_argument("choi_bound_global: empty model");
    }
    BoundResult result;
    for (int v = 0; v < model.graph.num_vertices(); ++v) {
        double b = choi_bound_node(model, v);
        result.per_node[v] = b;
        if (b > result.magnitude) result.magnitude = b;
    }
    return result;
}

double torque_compensation(const IsingModel& model, double prefactor) {
    if (model.graph.num_edges() == 0) {
        throw std::invalid_argument("torque_compensation: model has no edges");
    }
    const double avg_degree = 2.0 * model.graph.num_edges() /
                              static_cast<double>(model.graph.num_vertices());
    return std::abs(prefactor) * std::sqrt(avg_degree) * coupling_rms(model);
}

double raymond_lambda(const IsingModel& model, double lambda0) {
    const double n = static_cast<double>(model.graph.num_vertices());
    if (model.graph.num_vertices() < 2) {
        throw std::invalid_argument("raymond_lambda: need N >= 2");
    }
    double sum_sq = 0.0;
    for (double v : model.j) sum_sq += v * v;
    const double sigma_sq = 2.0 / (n * (n - 1.0)) * sum_sq;
    return lambda0 * std::sqrt(sigma_sq * n);
}

}  // namespace chaingauge
