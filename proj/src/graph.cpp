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

#include "chaingauge/graph.hpp"

#include <stdexcept>
#include <string>

namespace chaingauge {

Graph::Graph(int n) : n_(n), adj_(n >= 0 ? static_cast<std::size_t>(n) : 0) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) {
        throw std::invalid_argument("Graph::add_edge: vertex id out of range");
    }
    if (u == v) {
        throw std::invalid_argument("Graph::add_edge: self-loop");
    }
    Edge e = make_edge(u, v);
    if (index_.count(e)) {
        throw std::invalid_argument("Graph::add_edge: duplicate edge");
    }
    index_[e] = static_cast<int>(edges_.size());
    edges_.push_back(e);
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
}

const std::vector<int>& Graph::neighbors(int v) const {
    if (v < 0 || v >= n_) {
        throw std::invalid_argument("Graph::neighbors: vertex id out of range");
    }
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    return static_cast<int>(neighbors(v).size());
}

bool Graph::has_edge(int u, int v) const {
    return index_.count(make_edge(u, v)) != 0;
}

int Graph::edge_index(int u, int v) const {
    auto it = index_.find(make_edge(u, v));
    return it == index_.end() ? -1 : it->second;
}

}  // namespace chaingauge
