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

#include "chaingauge/ising.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chaingauge/errors.hpp"
#include "chaingauge/rng.hpp"

namespace chaingauge {

IsingModel::IsingModel(Graph g)
    : graph(std::move(g)),
      h(static_cast<std::size_t>(graph.num_vertices()), 0.0),
      j(static_cast<std::size_t>(graph.num_edges()), 0.0) {}

double IsingModel::j_at(int u, int v) const {
    int idx = graph.edge_index(u, v);
    return idx < 0 ? 0.0 : j[static_cast<std::size_t>(idx)];
}

void IsingModel::set_j(int u, int v, double value) {
    int idx = graph.edge_index(u, v);
    if (idx < 0) {
        throw std::invalid_argument("IsingModel::set_j: (u,v) is not an edge");
    }
    j[static_cast<std::size_t>(idx)] = value;
}

static void check_assignment(int n, const Assignment& a, const char* where) {
    if (static_cast<int>(a.size()) != n) {
        throw std::invalid_argument(std::string(where) + ": assignment size mismatch");
    }
    for (int x : a) {
        if (x != 1 && x != -1) {
            throw std::invalid_argument(std::string(where) + ": spins must be +1 or -1");
        }
    }
}

double energy(const IsingModel& model, const Assignment& a) {
    const int n = model.graph.num_vertices();
    check_assignment(n, a, "energy");
    double total = 0.0;
    for (int v = 0; v < n; ++v) {
        total += model.h[static_cast<std::size_t>(v)] * a[static_cast<std::size_t>(v)];
    }
    const auto& edges = model.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        total += model.j[i] * a[static_cast<std::size_t>(edges[i].first)] *
                 a[static_cast<std::size_t>(edges[i].second)];
    }
    return total;
}

IsingModel maxcut_to_ising(const Graph& g) {
    IsingModel model(g);
    std::fill(model.j.begin(), model.j.end(), 1.0);
    return model;
}

int cut_size(const Graph& g, const Assignment& a) {
    check_assignment(g.num_vertices(), a, "cut_size");
    int cut = 0;
    for (const Edge& e : g.edges()) {
        if (a[static_cast<std::size_t>(e.first)] != a[static_cast<std::size_t>(e.second)]) {
            ++cut;
        }
    }
    return cut;
}

static void check_range(const Range& r, const char* name) {
    if (r.lo > r.hi) {
        throw std::invalid_argument(std::string("autoscale: empty ") + name);
    }
    if (r.lo > 0.0 || r.hi < 0.0) {
        throw std::invalid_argument(std::string("autoscale: ") + name + " must contain 0");
    }
}

ScaledModel autoscale(const IsingModel& model, Range h_range, Range j_range) {
    check_range(h_range, "h_range");
    check_range(j_range, "j_range");

    double max_h = 0.0;
    for (double v : model.h) max_h = std::max(max_h, std::abs(v));
    double max_j = 0.0;
    for (double v : model.j) max_j = std::max(max_j, std::abs(v));

    const double h_limit = std::min(std::abs(h_range.lo), std::abs(h_range.hi));
    const double j_limit = std::min(std::abs(j_range.lo), std::abs(j_range.hi));
    if (max_h > 0.0 && h_limit == 0.0) {
        throw std::invalid_argument("autoscale: nonzero h cannot fit a zero-width h_range");
    }
    if (max_j > 0.0 && j_limit == 0.0) {
        throw std::invalid_argument("autoscale: nonzero J cannot fit a zero-width j_range");
    }

    double factor = 1.0;
    if (max_h > 0.0) factor = std::max(factor, max_h / h_limit);
    if (max_j > 0.0) factor = std::max(factor, max_j / j_limit);

    ScaledModel out{model, factor};
    if (factor != 1.0) {
        for (double& v : out.model.h) v /= factor;
        for (double& v : out.model.j) v /= factor;
    }
    return out;
}

Graph gen_erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_erdos_renyi: n must be >= 1");
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("gen_erdos_renyi: p must be in [0,1]");
    Graph g(n);
    Rng rng(seed);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (rng.uniform() < p) g.add_edge(u, v);
        }
    }
    return g;
}

Graph gen_d_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0 || d >= n) {
        throw std::invalid_argument("gen_d_regular: need 0 <= d < n");
    }
    if ((static_cast<long long>(n) * d) % 2 != 0) {
        throw std::invalid_argument("gen_d_regular: n*d must be even");
    }
    const int retry_budget = 1000;
    Rng rng(seed);
    for (int attempt = 0; attempt < retry_budget; ++attempt) {
        // One stub per (vertex, slot); a pairing is read off consecutive
        // entries of the shuffled stub list.
        std::vector<int> stubs;
        stubs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
        for (int v = 0; v < n; ++v) {
            for (int s = 0; s < d; ++s) stubs.push_back(v);
        }
        rng.shuffle(stubs);

        Graph g(n);
        bool simple = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i];
            int v = stubs[i + 1];
            if (u == v || g.has_edge(u, v)) {
                simple = false;
                break;
            }
            g.add_edge(u, v);
        }
        if (simple) return g;
    }
    throw generation_error("gen_d_regular: retry budget exhausted");
}

double coupling_rms(const IsingModel& model) {
    if (model.graph.num_edges() == 0) {
        throw std::invalid_argument("coupling_rms: model has no edges");
    }
    double sum_sq = 0.0;
    for (double v : model.j) sum_sq += v * v;
    return std::sqrt(sum_sq / static_cast<double>(model.graph.num_edges()));
}

}  // namespace chaingauge
