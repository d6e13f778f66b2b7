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

#include "chaingauge/topology.hpp"

#include <algorithm>
#include <stdexcept>

namespace chaingauge {

Topology::Topology(std::vector<int> qubits, std::vector<Edge> couplers,
                   std::optional<TopologyMeta> meta)
    : meta_(std::move(meta)) {
    std::sort(qubits.begin(), qubits.end());
    qubits.erase(std::unique(qubits.begin(), qubits.end()), qubits.end());
    qubits_ = std::move(qubits);

    for (Edge& e : couplers) e = make_edge(e.first, e.second);
    std::sort(couplers.begin(), couplers.end());
    couplers.erase(std::unique(couplers.begin(), couplers.end()), couplers.end());

    for (const Edge& e : couplers) {
        if (e.first == e.second) {
            throw std::invalid_argument("Topology: self-coupler");
        }
        if (!std::binary_search(qubits_.begin(), qubits_.end(), e.first) ||
            !std::binary_search(qubits_.begin(), qubits_.end(), e.second)) {
            throw std::invalid_argument("Topology: coupler touches absent qubit");
        }
    }
    couplers_ = std::move(couplers);

    for (int q : qubits_) adj_[q];  // ensure every qubit has an entry
    for (const Edge& e : couplers_) {
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
    for (auto& [q, nbrs] : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Topology::has_qubit(int q) const {
    return std::binary_search(qubits_.begin(), qubits_.end(), q);
}

bool Topology::has_coupler(int a, int b) const {
    return std::binary_search(couplers_.begin(), couplers_.end(), make_edge(a, b));
}

const std::vector<int>& Topology::neighbors(int q) const {
    static const std::vector<int> empty;
    auto it = adj_.find(q);
    return it == adj_.end() ? empty : it->second;
}

int chimera_qubit_id(const ChimeraCoord& c, int m, int l) {
    return ((c.row * m + c.col) * 2 + c.side) * l + c.k;
}

ChimeraCoord chimera_coord(int id, int m, int l) {
    ChimeraCoord c;
    c.k = id % l;
    int rest = id / l;
    c.side = rest % 2;
    rest /= 2;
    c.col = rest % m;
    c.row = rest / m;
    return c;
}

Topology chimera(int m, int l) {
    if (m < 1 || l < 1) throw std::invalid_argument("chimera: need m >= 1 and l >= 1");
    std::vector<int> qubits;
    qubits.reserve(static_cast<std::size_t>(2 * l * m * m));
    for (int id = 0; id < 2 * l * m * m; ++id) qubits.push_back(id);

    std::vector<Edge> couplers;
    for (int r = 0; r < m; ++r) {
        for (int c = 0; c < m; ++c) {
            for (int k0 = 0; k0 < l; ++k0) {
                int vert = chimera_qubit_id({r, c, 0, k0}, m, l);
                // intra-cell: vertical shore to every horizontal qubit
                for (int k1 = 0; k1 < l; ++k1) {
                    couplers.push_back(make_edge(vert, chimera_qubit_id({r, c, 1, k1}, m, l)));
                }
                // vertical inter-cell
                if (r + 1 < m) {
                    couplers.push_back(make_edge(vert, chimera_qubit_id({r + 1, c, 0, k0}, m, l)));
                }
                // horizontal inter-cell
                if (c + 1 < m) {
                    int horiz = chimera_qubit_id({r, c, 1, k0}, m, l);
                    couplers.push_back(make_edge(horiz, chimera_qubit_id({r, c + 1, 1, k0}, m, l)));
                }
            }
        }
    }
    return Topology(std::move(qubits), std::move(couplers), TopologyMeta{"chimera", m, l});
}

Topology remove_qubits(const Topology& t, const std::set<int>& dead) {
    for (int q : dead) {
        if (!t.has_qubit(q)) {
            throw std::invalid_argument("remove_qubits: unknown qubit id");
        }
    }
    std::vector<int> qubits;
    for (int q : t.qubits()) {
        if (!dead.count(q)) qubits.push_back(q);
    }
    std::vector<Edge> couplers;
    for (const Edge& e : t.couplers()) {
        if (!dead.count(e.first) && !dead.count(e.second)) couplers.push_back(e);
    }
    return Topology(std::move(qubits), std::move(couplers), t.meta());
}

}  // namespace chaingauge
