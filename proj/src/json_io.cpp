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

#include "chaingauge/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace chaingauge {

using nlohmann::json;

static std::string edge_key(const Edge& e) {
    return std::to_string(e.first) + "," + std::to_string(e.second);
}

static Edge parse_edge_key(const std::string& key) {
    auto comma = key.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("model JSON: malformed edge key '" + key + "'");
    }
    int u = std::stoi(key.substr(0, comma));
    int v = std::stoi(key.substr(comma + 1));
    if (u == v) throw std::invalid_argument("model JSON: self-loop in key '" + key + "'");
    return make_edge(u, v);
}

json model_to_json(const IsingModel& model) {
    json j;
    j["n"] = model.graph.num_vertices();
    json h = json::object();
    for (int v = 0; v < model.graph.num_vertices(); ++v) {
        if (model.h[static_cast<std::size_t>(v)] != 0.0) {
            h[std::to_string(v)] = model.h[static_cast<std::size_t>(v)];
        }
    }
    j["h"] = h;
    json jj = json::object();
    const auto& edges = model.graph.edges();
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
    for (std::size_t i : order) {
        jj[edge_key(edges[i])] = model.j[i];
    }
    j["J"] = jj;
    return j;
}

IsingModel model_from_json(const json& j) {
    if (!j.contains("n")) throw std::invalid_argument("model JSON: missing 'n'");
    int n = j.at("n").get<int>();
    if (n < 0) throw std::invalid_argument("model JSON: negative 'n'");

    std::map<int, double> h_in;
    if (j.contains("h")) {
        for (const auto& [key, value] : j.at("h").items()) {
            h_in[std::stoi(key)] = value.get<double>();
        }
    }
    std::map<Edge, double> j_in;
    if (j.contains("J")) {
        for (const auto& [key, value] : j.at("J").items()) {
            Edge e = parse_edge_key(key);
            if (j_in.count(e)) {
                throw std::invalid_argument("model JSON: duplicate edge key '" + key + "'");
            }
            j_in[e] = value.get<double>();
        }
    }

    // ids outside [0, n) get remapped densely in sorted order
    bool dense = true;
    std::set<int> ids;
    for (const auto& [v, w] : h_in) {
        ids.insert(v);
        if (v < 0 || v >= n) dense = false;
    }
    for (const auto& [e, w] : j_in) {
        ids.insert(e.first);
        ids.insert(e.second);
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n) dense = false;
    }
    std::map<int, int> remap;
    if (!dense) {
        int next = 0;
        for (int id : ids) remap[id] = next++;
        n = next;
    }
    auto mapped = [&](int v) { return dense ? v : remap.at(v); };

    Graph g(n);
    for (const auto& [e, w] : j_in) g.add_edge(mapped(e.first), mapped(e.second));
    IsingModel model(std::move(g));
    for (const auto& [v, w] : h_in) model.h[static_cast<std::size_t>(mapped(v))] = w;
    for (const auto& [e, w] : j_in) model.set_j(mapped(e.first), mapped(e.second), w);
    return model;
}

json graph_to_json(const Graph& g) {
    IsingModel empty(g);
    return model_to_json(empty);
}

Graph graph_from_json(const json& j) {
    return model_from_json(j).graph;
}

json topology_to_json(const Topology& t) {
    json j;
    j["qubits"] = t.qubits();
    json couplers = json::array();
    for (const Edge& c : t.couplers()) couplers.push_back({c.first, c.second});
    j["couplers"] = couplers;
    if (t.meta().has_value()) {
        j["meta"] = {{"family", t.meta()->family}, {"m", t.meta()->m}, {"l", t.meta()->l}};
    }
    return j;
}

Topology topology_from_json(const json& j) {
    std::vector<int> qubits = j.at("qubits").get<std::vector<int>>();
    std::vector<Edge> couplers;
    for (const auto& pair : j.at("couplers")) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("topology JSON: couplers must be [u,v] pairs");
        }
        couplers.push_back(make_edge(pair[0].get<int>(), pair[1].get<int>()));
    }
    std::optional<TopologyMeta> meta;
    if (j.contains("meta")) {
        TopologyMeta m;
        m.family = j.at("meta").value("family", std::string{});
        m.m = j.at("meta").value("m", 0);
        m.l = j.at("meta").value("l", 0);
        meta = m;
    }
    return Topology(std::move(qubits), std::move(couplers), std::move(meta));
}

json embedding_to_json(const Embedding& e) {
    json j;
    json phi = json::object();
    for (const auto& [v, chain] : e.phi) phi[std::to_string(v)] = chain;
    j["phi"] = phi;
    if (e.strength.is_uniform()) {
        j["chain_strength"] = *e.strength.uniform_value();
    } else if (!e.strength.per_chain().empty()) {
        json per = json::object();
        for (const auto& [v, f] : e.strength.per_chain()) per[std::to_string(v)] = f;
        j["chain_strength"] = per;
    }
    return j;
}

Embedding embedding_from_json(const json& j) {
    Embedding e;
    for (const auto& [key, chain] : j.at("phi").items()) {
        std::vector<int> qubits = chain.get<std::vector<int>>();
        std::sort(qubits.begin(), qubits.end());
        e.phi[std::stoi(key)] = std::move(qubits);
    }
    if (j.contains("chain_strength")) {
        const json& cs = j.at("chain_strength");
        if (cs.is_number()) {
            e.strength = ChainStrength(cs.get<double>());
        } else if (cs.is_object()) {
            std::map<int, double> per;
            for (const auto& [key, value] : cs.items()) {
                per[std::stoi(key)] = value.get<double>();
            }
            e.strength = ChainStrength(std::move(per));
        } else {
            throw std::invalid_argument("embedding JSON: chain_strength must be a number or map");
        }
    }
    return e;
}

json sampleset_to_json(const SampleSet& ss) {
    json j;
    j["shots"] = ss.shots;
    j["seed"] = ss.seed;
    json samples = json::array();
    for (const Sample& s : ss.samples) {
        json spins = json::object();
        for (std::size_t i = 0; i < s.spins.size(); ++i) {
            spins[std::to_string(ss.label_of(static_cast<int>(i)))] = s.spins[i];
        }
        samples.push_back({{"spins", spins}, {"energy", s.energy}, {"occurrences", s.occurrences}});
    }
    j["samples"] = samples;
    return j;
}

SampleSet sampleset_from_json(const json& j) {
    SampleSet ss;
    ss.shots = j.at("shots").get<std::int64_t>();
    ss.seed = j.at("seed").get<std::uint64_t>();

    // collect the label space from the first sample; all samples must agree
    std::set<int> label_set;
    const json& samples = j.at("samples");
    for (const auto& sample : samples) {
        for (const auto& [key, value] : sample.at("spins").items()) {
            label_set.insert(std::stoi(key));
        }
    }
    std::vector<int> labels(label_set.begin(), label_set.end());
    std::map<int, int> pos;
    for (std::size_t i = 0; i < labels.size(); ++i) pos[labels[i]] = static_cast<int>(i);

    bool identity = true;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] != static_cast<int>(i)) identity = false;
    }
    if (!identity) ss.labels = labels;

    for (const auto& sample : samples) {
        Sample s;
        s.spins.assign(labels.size(), 0);
        const json& spins = sample.at("spins");
        if (spins.size() != labels.size()) {
            throw std::invalid_argument("sample set JSON: samples cover different qubits");
        }
        for (const auto& [key, value] : spins.items()) {
            s.spins[static_cast<std::size_t>(pos.at(std::stoi(key)))] = value.get<int>();
        }
        s.energy = sample.at("energy").get<double>();
        s.occurrences = sample.at("occurrences").get<std::int64_t>();
        ss.samples.push_back(std::move(s));
    }
    return ss;
}

json bound_to_json(const BoundResult& bound, const std::string& method) {
    json per = json::object();
    for (const auto& [v, value] : bound.per_node) per[std::to_string(v)] = value;
    return {{"method", method}, {"magnitude", bound.magnitude}, {"per_node", per}};
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void save_json(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace chaingauge
