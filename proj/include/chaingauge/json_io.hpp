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
#include <string>

#include <json.hpp>

#include "chaingauge/bounds.hpp"
#include "chaingauge/embedding.hpp"
#include "chaingauge/ising.hpp"
#include "chaingauge/sample_set.hpp"
#include "chaingauge/topology.hpp"

// File formats:
//   model     {"n": int, "h": {"v": float}, "J": {"u,v": float}}   (u < v)
//   graph     same as model with empty h/J
//   topology  {"qubits": [int], "couplers": [[int,int]],
//              "meta": {"family": str, "m": int, "l": int}}
//   embedding {"phi": {"v": [qubit ids]}, "chain_strength": float | {"v": float}}
//   samples   {"shots": int, "seed": int,
//              "samples": [{"spins": {"q": +-1}, "energy": float,
//                           "occurrences": int}]}
// Vertex ids outside [0, n) are remapped to dense ids in sorted order on
// ingestion of models and graphs.

namespace chaingauge {

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json model_to_json(const IsingModel& model);
IsingModel model_from_json(const nlohmann::json& j);

nlohmann::json topology_to_json(const Topology& t);
Topology topology_from_json(const nlohmann::json& j);

nlohmann::json embedding_to_json(const Embedding& e);
Embedding embedding_from_json(const nlohmann::json& j);

nlohmann::json sampleset_to_json(const SampleSet& ss);
SampleSet sampleset_from_json(const nlohmann::json& j);

nlohmann::json bound_to_json(const BoundResult& bound, const std::string& method);

nlohmann::json load_json(const std::string& path);
void save_json(const std::string& path, const nlohmann::json& j);

}  // namespace chaingauge
