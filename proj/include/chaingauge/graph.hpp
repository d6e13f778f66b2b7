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
#include <map>
#include <utility>
#include <vector>

namespace chaingauge {

// Unordered vertex pair, normalized so first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Undirected simple graph over dense vertex ids [0, n). No self-loops, no
// duplicate edges.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Throws std::invalid_argument on self-loops, duplicates or ids
    // outside [0, n).
    void add_edge(int u, int v);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;
    bool has_edge(int u, int v) const;

    // Position of (u,v) in edges(), or -1 when absent.
    int edge_index(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::map<Edge, int> index_;
};

}  // namespace chaingauge
