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
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chaingauge/graph.hpp"

namespace chaingauge {

struct TopologyMeta {
    std::string family;
    int m = 0;  // grid size
    int l = 0;  // shore size
};

// Physical hardware graph. Qubit ids are arbitrary non-negative integers and
// need not be dense (masking out dead qubits leaves holes).
class Topology {
public:
    Topology() = default;
    // Sorts and deduplicates; throws std::invalid_argument on self-couplers
    // or couplers touching absent qubits.
    Topology(std::vector<int> qubits, std::vector<Edge> couplers,
             std::optional<TopologyMeta> meta = std::nullopt);

    const std::vector<int>& qubits() const { return qubits_; }
    const std::vector<Edge>& couplers() const { return couplers_; }
    const std::optional<TopologyMeta>& meta() const { return meta_; }
    int num_qubits() const { return static_cast<int>(qubits_.size()); }
    int num_couplers() const { return static_cast<int>(couplers_.size()); }

    bool has_qubit(int q) const;
    bool has_coupler(int a, int b) const;
    const std::vector<int>& neighbors(int q) const;  // sorted; empty for unknown ids

private:
    std::vector<int> qubits_;    // sorted ascending
    std::vector<Edge> couplers_; // normalized, sorted ascending
    std::map<int, std::vector<int>> adj_;
    std::optional<TopologyMeta> meta_;
};

// Chimera coordinates: cell (row, col), shore side (0 = vertical,
// 1 = horizontal), in-shore index k.
struct ChimeraCoord {
    int row = 0;
    int col = 0;
    int side = 0;
    int k = 0;
};

int chimera_qubit_id(const ChimeraCoord& c, int m, int l);
ChimeraCoord chimera_coord(int id, int m, int l);

// m x m grid of K_{l,l} unit cells. Intra-cell couplers join the two shores
// completely; vertical qubits couple to the cell below, horizontal qubits to
// the cell to the right, at equal k.
Topology chimera(int m, int l);

// Copy with the given qubits and all incident couplers removed.
Topology remove_qubits(const Topology& t, const std::set<int>& dead);

}  // namespace chaingauge
