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

#include "chaingauge/embedding.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <deque>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "chaingauge/errors.hpp"
#include "chaingauge/rng.hpp"

namespace chaingauge {

double ChainStrength::for_vertex(int v) const {
    if (uniform_.has_value()) return *uniform_;
    auto it = per_chain_.find(v);
    if (it == per_chain_.end()) {
        throw std::invalid_argument("ChainStrength: no magnitude for vertex " + std::to_string(v));
    }
    return it->second;
}

int Embedding::total_qubits() const {
    int total = 0;
    for (const auto& [v, chain] : phi) total += static_cast<int>(chain.size());
    return total;
}

const std::vector<int>& Embedding::chain(int v) const {
    auto it = phi.find(v);
    if (it == phi.end()) {
        throw std::invalid_argument("Embedding: vertex " + std::to_string(v) + " is not mapped");
    }
    return it->second;
}

// ---------------------------------------------------------------------------
// validation

static bool chain_connected(const std::vector<int>& chain, const Topology& target) {
    if (chain.empty()) return false;
    for (int q : chain) {
        if (!target.has_qubit(q)) return false;
    }
    if (chain.size() == 1) return true;
    std::set<int> members(chain.begin(), chain.end());
    std::set<int> seen{chain.front()};
    std::deque<int> queue{chain.front()};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int nb : target.neighbors(cur)) {
            if (members.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                queue.push_back(nb);
            }
        }
    }
    return seen.size() == members.size();
}

ValidityReport validate(const Embedding& e, const Graph& source, const Topology& target) {
    ValidityReport report;
    const int n = source.num_vertices();

    // condition 2: vertex-disjoint chains
    std::map<int, std::vector<int>> owners;  // qubit -> logical vertices using it
    for (int v = 0; v < n; ++v) {
        auto it = e.phi.find(v);
        if (it == e.phi.end()) continue;
        for (int q : it->second) owners[q].push_back(v);
    }
    std::set<int> overlapping;
    for (const auto& [q, vs] : owners) {
        if (vs.size() > 1) overlapping.insert(vs.begin(), vs.end());
    }
    if (!overlapping.empty()) {
        report.chains_disjoint = false;
        report.overlapping_vertices.assign(overlapping.begin(), overlapping.end());
    }

    // condition 1: each vertex maps to a non-empty connected subgraph
    for (int v = 0; v < n; ++v) {
        auto it = e.phi.find(v);
        if (it == e.phi.end() || !chain_connected(it->second, target)) {
            report.chains_connected = false;
            report.broken_chains.push_back(v);
        }
    }

    // condition 3: every source edge has a physical coupler between its chains
    std::set<Edge> covered;
    for (const Edge& c : target.couplers()) {
        auto a = owners.find(c.first);
        auto b = owners.find(c.second);
        if (a == owners.end() || b == owners.end()) continue;
        for (int va : a->second) {
            for (int vb : b->second) {
                if (va != vb) covered.insert(make_edge(va, vb));
            }
        }
    }
    for (const Edge& se : source.edges()) {
        if (!covered.count(se)) {
            report.edges_covered = false;
            report.uncovered_edges.push_back(se);
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// clique embedding (cross construction)

Embedding chimera_clique_embedding(int m) {
    if (m < 1) throw std::invalid_argument("chimera_clique_embedding: m must be >= 1");
    const int l = 4;
    Embedding e;
    for (int i = 0; i < 4 * m; ++i) {
        const int block = i / 4;
        const int lane = i % 4;
        std::vector<int> chain;
        chain.reserve(static_cast<std::size_t>(2 * m));
        for (int r = 0; r < m; ++r) {
            chain.push_back(chimera_qubit_id({r, block, 0, lane}, m, l));
        }
        for (int c = 0; c < m; ++c) {
            chain.push_back(chimera_qubit_id({block, c, 1, lane}, m, l));
        }
        std::sort(chain.begin(), chain.end());
        e.phi[i] = std::move(chain);
    }
    return e;
}

// ---------------------------------------------------------------------------
// greedy embedder

namespace {

// Dense view of the target for the embedder's inner loops.
struct TargetView {
    std::vector<int> ids;                 // dense index -> qubit id
    std::map<int, int> index;             // qubit id -> dense index
    std::vector<std::vector<int>> adj;    // dense adjacency, sorted

    explicit TargetView(const Topology& t) : ids(t.qubits()) {
        for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
        adj.resize(ids.size());
        for (const Edge& c : t.couplers()) {
            int a = index[c.first];
            int b = index[c.second];
            adj[static_cast<std::size_t>(a)].push_back(b);
            adj[static_cast<std::size_t>(b)].push_back(a);
        }
        for (auto& nbrs : adj) std::sort(nbrs.begin(), nbrs.end());
    }
};

struct GreedyState {
    std::vector<int> owner;               // dense qubit -> logical vertex or -1
    std::vector<std::vector<int>> chains; // logical vertex -> sorted dense qubits
};

bool chain_connected_without(const std::vector<int>& chain, int removed,
                             const TargetView& view) {
    std::vector<int> rest;
    for (int q : chain) {
        if (q != removed) rest.push_back(q);
    }
    if (rest.empty()) return false;
    std::set<int> members(rest.begin(), rest.end());
    std::set<int> seen{rest.front()};
    std::deque<int> queue{rest.front()};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (int nb : view.adj[static_cast<std::size_t>(cur)]) {
            if (members.count(nb) && !seen.count(nb)) {
                seen.insert(nb);
                queue.push_back(nb);
            }
        }
    }
    return seen.size() == members.size();
}

// Does any coupler join chain(v) minus `removed` to chain(u)?
bool edge_covered_without(const GreedyState& st, const TargetView& view, int v, int u,
                          int removed) {
    for (int q : st.chains[static_cast<std::size_t>(v)]) {
        if (q == removed) continue;
        for (int nb : view.adj[static_cast<std::size_t>(q)]) {
            if (st.owner[static_cast<std::size_t>(nb)] == u) return true;
        }
    }
    return false;
}

bool greedy_attempt(const Graph& source, const TargetView& view, std::uint64_t seed,
                    std::optional<int> qubit_budget, GreedyState& st) {
    const int n = source.num_vertices();
    const int nt = static_cast<int>(view.ids.size());
    const int kInf = INT_MAX;
    Rng rng(seed);

    // Placement order: degree-descending with a seeded tie shuffle, but
    // restricted to vertices adjacent to what is already placed, so every
    // placement (past each component's seed vertex) attaches to the growing
    // cluster instead of stranding singletons that later get walled in.
    std::vector<int> by_degree(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) by_degree[static_cast<std::size_t>(v)] = v;
    rng.shuffle(by_degree);
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](int a, int b) { return source.degree(a) > source.degree(b); });
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<char> queued(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v) {
        std::vector<int> frontier;
        if (!queued[static_cast<std::size_t>(by_degree[static_cast<std::size_t>(v)])]) {
            frontier.push_back(by_degree[static_cast<std::size_t>(v)]);
            queued[static_cast<std::size_t>(by_degree[static_cast<std::size_t>(v)])] = 1;
        }
        while (!frontier.empty()) {
            std::stable_sort(frontier.begin(), frontier.end(), [&](int a, int b) {
                return source.degree(a) > source.degree(b);
            });
            int next = frontier.front();
            frontier.erase(frontier.begin());
            order.push_back(next);
            for (int u : source.neighbors(next)) {
                if (!queued[static_cast<std::size_t>(u)]) {
                    queued[static_cast<std::size_t>(u)] = 1;
                    frontier.push_back(u);
                }
            }
        }
    }

    st.owner.assign(static_cast<std::size_t>(nt), -1);
    st.chains.assign(static_cast<std::size_t>(n), {});
    std::vector<char> placed(static_cast<std::size_t>(n), 0);

    // Shortest free paths from the frontier of one chain, congestion-aware:
    // stepping onto a free qubit costs 1 plus the number of its occupied
    // neighbors. Routing then skirts existing chains instead of plowing
    // through their surroundings, which is what walls chains in.
    std::vector<long> dist(static_cast<std::size_t>(nt));
    std::vector<int> parent(static_cast<std::size_t>(nt));
    auto step_cost = [&](int q) {
        long occupied = 0;
        for (int nb : view.adj[static_cast<std::size_t>(q)]) {
            if (st.owner[static_cast<std::size_t>(nb)] >= 0) ++occupied;
        }
        return 1 + 3 * occupied;
    };
    auto route_from_chain = [&](int u) {
        std::fill(dist.begin(), dist.end(), static_cast<long>(kInf));
        std::fill(parent.begin(), parent.end(), -1);
        std::priority_queue<std::pair<long, int>, std::vector<std::pair<long, int>>,
                            std::greater<>> queue;
        for (int cq : st.chains[static_cast<std::size_t>(u)]) {
            for (int nb : view.adj[static_cast<std::size_t>(cq)]) {
                if (st.owner[static_cast<std::size_t>(nb)] >= 0) continue;
                long d = step_cost(nb);
                if (d < dist[static_cast<std::size_t>(nb)]) {
                    dist[static_cast<std::size_t>(nb)] = d;
                    queue.emplace(d, nb);
                }
            }
        }
        while (!queue.empty()) {
            auto [d, cur] = queue.top();
            queue.pop();
            if (d > dist[static_cast<std::size_t>(cur)]) continue;
            for (int nb : view.adj[static_cast<std::size_t>(cur)]) {
                if (st.owner[static_cast<std::size_t>(nb)] >= 0) continue;
                long next = d + step_cost(nb);
                if (next < dist[static_cast<std::size_t>(nb)]) {
                    dist[static_cast<std::size_t>(nb)] = next;
                    parent[static_cast<std::size_t>(nb)] = cur;
                    queue.emplace(next, nb);
                }
            }
        }
    };

    for (int v : order) {
        std::vector<int> anchors;  // already-placed source neighbors
        for (int u : source.neighbors(v)) {
            if (placed[static_cast<std::size_t>(u)]) anchors.push_back(u);
        }
        std::sort(anchors.begin(), anchors.end());

        if (anchors.empty()) {
            std::vector<int> free_qubits;
            for (int q = 0; q < nt; ++q) {
                if (st.owner[static_cast<std::size_t>(q)] < 0) free_qubits.push_back(q);
            }
            if (free_qubits.empty()) return false;
            int q = free_qubits[rng.below(free_qubits.size())];
            st.owner[static_cast<std::size_t>(q)] = v;
            st.chains[static_cast<std::size_t>(v)] = {q};
            placed[static_cast<std::size_t>(v)] = 1;
            continue;
        }

        // root selection: free qubit minimizing the summed distance to all
        // anchor chains
        const std::size_t k = anchors.size();
        std::vector<long> cost(static_cast<std::size_t>(nt), 0);
        std::vector<int> reach(static_cast<std::size_t>(nt), 0);
        for (std::size_t i = 0; i < k; ++i) {
            route_from_chain(anchors[i]);
            for (int q = 0; q < nt; ++q) {
                if (dist[static_cast<std::size_t>(q)] != kInf) {
                    cost[static_cast<std::size_t>(q)] += dist[static_cast<std::size_t>(q)];
                    ++reach[static_cast<std::size_t>(q)];
                }
            }
        }
        long best = LONG_MAX;
        std::vector<int> ties;
        for (int q = 0; q < nt; ++q) {
            if (st.owner[static_cast<std::size_t>(q)] >= 0) continue;
            if (reach[static_cast<std::size_t>(q)] != static_cast<int>(k)) continue;
            if (cost[static_cast<std::size_t>(q)] < best) {
                best = cost[static_cast<std::size_t>(q)];
                ties.assign(1, q);
            } else if (cost[static_cast<std::size_t>(q)] == best) {
                ties.push_back(q);
            }
        }
        if (ties.empty()) return false;
        int root = ties[rng.below(ties.size())];
        st.owner[static_cast<std::size_t>(root)] = v;
        st.chains[static_cast<std::size_t>(v)] = {root};

        // Connect to each anchor in turn along a shortest free path. The
        // near half of the path joins v's chain and the far half joins the
        // anchor's chain; a chimera qubit has at most six couplers, so chains
        // of high-degree vertices must thicken as attachments accumulate.
        for (std::size_t i = 0; i < k; ++i) {
            int u = anchors[i];
            bool adjacent = false;
            for (int cq : st.chains[static_cast<std::size_t>(v)]) {
                for (int nb : view.adj[static_cast<std::size_t>(cq)]) {
                    if (st.owner[static_cast<std::size_t>(nb)] == u) {
                        adjacent = true;
                        break;
                    }
                }
                if (adjacent) break;
            }
            if (adjacent) continue;

            route_from_chain(u);
            int meet = -1;
            long meet_dist = kInf;
            for (int cq : st.chains[static_cast<std::size_t>(v)]) {
                for (int nb : view.adj[static_cast<std::size_t>(cq)]) {
                    if (st.owner[static_cast<std::size_t>(nb)] < 0 &&
                        dist[static_cast<std::size_t>(nb)] < meet_dist) {
                        meet_dist = dist[static_cast<std::size_t>(nb)];
                        meet = nb;
                    }
                }
            }
            if (meet < 0) return false;
            std::vector<int> path;  // meet -> ... -> qubit adjacent to chain(u)
            for (int cur = meet; cur != -1; cur = parent[static_cast<std::size_t>(cur)]) {
                path.push_back(cur);
            }
            const std::size_t near = (path.size() + 1) / 2;
            for (std::size_t p = 0; p < path.size(); ++p) {
                int q = path[p];
                int owner = p < near ? v : u;
                st.owner[static_cast<std::size_t>(q)] = owner;
                st.chains[static_cast<std::size_t>(owner)].push_back(q);
            }
        }
        std::sort(st.chains[static_cast<std::size_t>(v)].begin(),
                  st.chains[static_cast<std::size_t>(v)].end());
        placed[static_cast<std::size_t>(v)] = 1;
    }

    // pruning pass: drop any chain qubit whose removal keeps the embedding valid
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < n; ++v) {
            auto& chain = st.chains[static_cast<std::size_t>(v)];
            for (std::size_t qi = 0; qi < chain.size() && chain.size() > 1; ++qi) {
                int q = chain[qi];
                if (!chain_connected_without(chain, q, view)) continue;
                bool covered = true;
                for (int u : source.neighbors(v)) {
                    if (!edge_covered_without(st, view, v, u, q)) {
                        covered = false;
                        break;
                    }
                }
                if (!covered) continue;
                st.owner[static_cast<std::size_t>(q)] = -1;
                chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(qi));
                --qi;
                changed = true;
            }
        }
    }

    if (qubit_budget.has_value()) {
        int total = 0;
        for (const auto& chain : st.chains) total += static_cast<int>(chain.size());
        if (total > *qubit_budget) return false;
    }
    return true;
}

}  // namespace

Embedding greedy_embed(const Graph& source, const Topology& target, std::uint64_t seed,
                       int max_tries, std::optional<int> qubit_budget) {
    if (max_tries < 1) throw std::invalid_argument("greedy_embed: max_tries must be >= 1");
    if (source.num_vertices() == 0) return Embedding{};
    TargetView view(target);
    GreedyState st;
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        if (!greedy_attempt(source, view, derive_seed(seed, static_cast<std::uint64_t>(attempt)),
                            qubit_budget, st)) {
            continue;
        }
        Embedding e;
        for (int v = 0; v < source.num_vertices(); ++v) {
            std::vector<int> ids;
            ids.reserve(st.chains[static_cast<std::size_t>(v)].size());
            for (int q : st.chains[static_cast<std::size_t>(v)]) {
                ids.push_back(view.ids[static_cast<std::size_t>(q)]);
            }
            std::sort(ids.begin(), ids.end());
            e.phi[v] = std::move(ids);
        }
        if (validate(e, source, target).valid()) return e;
    }
    throw embedding_not_found("greedy_embed: no valid embedding in " +
                              std::to_string(max_tries) + " tries");
}

// ---------------------------------------------------------------------------
// embedded model construction

EmbeddedModel embed_model(const IsingModel& model, const Embedding& e,
                          const Topology& target, const ChainStrength& strength) {
    ValidityReport report = validate(e, model.graph, target);
    if (!report.valid()) {
        throw std::invalid_argument("embed_model: embedding is not valid for this model/target");
    }
    const int n = model.graph.num_vertices();

    EmbeddedModel em;
    em.embedding = e;
    em.logical_n = n;

    std::map<int, int> owner;  // qubit id -> logical vertex
    for (int v = 0; v < n; ++v) {
        for (int q : e.chain(v)) {
            owner[q] = v;
            em.qubit_of.push_back(q);
        }
    }
    std::sort(em.qubit_of.begin(), em.qubit_of.end());
    for (std::size_t i = 0; i < em.qubit_of.size(); ++i) {
        em.index_of[em.qubit_of[i]] = static_cast<int>(i);
    }

    // chain magnitudes, required wherever a chain has internal couplers
    std::vector<double> magnitude(static_cast<std::size_t>(n), 0.0);
    std::vector<char> has_ferro(static_cast<std::size_t>(n), 0);
    for (const Edge& c : target.couplers()) {
        auto a = owner.find(c.first);
        auto b = owner.find(c.second);
        if (a != owner.end() && b != owner.end() && a->second == b->second) {
            has_ferro[static_cast<std::size_t>(a->second)] = 1;
        }
    }
    for (int v = 0; v < n; ++v) {
        if (!has_ferro[static_cast<std::size_t>(v)]) continue;
        double f = strength.for_vertex(v);
        if (!(f > 0.0)) {
            throw std::invalid_argument("embed_model: chain strength magnitude must be > 0");
        }
        magnitude[static_cast<std::size_t>(v)] = std::abs(f);
    }

    // couplers used per logical edge, for the uniform J split
    std::map<Edge, int> inter_count;
    for (const Edge& c : target.couplers()) {
        auto a = owner.find(c.first);
        auto b = owner.find(c.second);
        if (a == owner.end() || b == owner.end()) continue;
        if (a->second == b->second) continue;
        Edge le = make_edge(a->second, b->second);
        if (model.graph.edge_index(le.first, le.second) >= 0) ++inter_count[le];
    }

    Graph phys_graph(static_cast<int>(em.qubit_of.size()));
    std::vector<double> phys_j;
    em.ferro_of.assign(static_cast<std::size_t>(n), {});
    for (const Edge& c : target.couplers()) {
        auto a = owner.find(c.first);
        auto b = owner.find(c.second);
        if (a == owner.end() || b == owner.end()) continue;
        int ia = em.index_of[c.first];
        int ib = em.index_of[c.second];
        if (a->second == b->second) {
            int v = a->second;
            phys_graph.add_edge(ia, ib);
            phys_j.push_back(-magnitude[static_cast<std::size_t>(v)]);
            em.ferro_of[static_cast<std::size_t>(v)].push_back(static_cast<int>(em.ferro_edges.size()));
            em.ferro_edges.push_back({std::min(ia, ib), std::max(ia, ib), v});
        } else {
            Edge le = make_edge(a->second, b->second);
            int idx = model.graph.edge_index(le.first, le.second);
            if (idx < 0) continue;  // hardware coupler with no logical edge: left unprogrammed
            phys_graph.add_edge(ia, ib);
            phys_j.push_back(model.j[static_cast<std::size_t>(idx)] /
                             static_cast<double>(inter_count[le]));
        }
    }

    em.physical = IsingModel(std::move(phys_graph));
    em.physical.j = std::move(phys_j);
    for (int v = 0; v < n; ++v) {
        const auto& chain = e.chain(v);
        double share = model.h[static_cast<std::size_t>(v)] / static_cast<double>(chain.size());
        for (int q : chain) {
            em.physical.h[static_cast<std::size_t>(em.index_of[q])] = share;
        }
    }
    return em;
}

double autoscale_embedded(EmbeddedModel& em, Range h_range, Range j_range) {
    ScaledModel scaled = autoscale(em.physical, h_range, j_range);
    em.physical = std::move(scaled.model);
    return scaled.factor;
}

// ---------------------------------------------------------------------------
// unembedding and chain-break metrics

std::vector<Assignment> unembed(const SampleSet& ss, const Embedding& e, std::uint64_t seed) {
    if (e.phi.empty()) return std::vector<Assignment>(ss.samples.size());
    const int n = e.phi.rbegin()->first + 1;
    for (int v = 0; v < n; ++v) {
        if (!e.phi.count(v)) {
            throw std::invalid_argument("unembed: embedding misses logical vertex " +
                                        std::to_string(v));
        }
    }
    std::map<int, int> pos;  // qubit id -> position in sample spins
    if (ss.labels.empty()) {
        for (const auto& [v, chain] : e.phi) {
            for (int q : chain) pos[q] = q;
        }
    } else {
        for (std::size_t i = 0; i < ss.labels.size(); ++i) {
            pos[ss.labels[i]] = static_cast<int>(i);
        }
    }

    std::vector<Assignment> out;
    out.reserve(ss.samples.size());
    for (std::size_t si = 0; si < ss.samples.size(); ++si) {
        const Assignment& spins = ss.samples[si].spins;
        Assignment logical(static_cast<std::size_t>(n), 1);
        for (const auto& [v, chain] : e.phi) {
            long sum = 0;
            for (int q : chain) {
                auto it = pos.find(q);
                if (it == pos.end() || it->second >= static_cast<int>(spins.size())) {
                    throw std::invalid_argument("unembed: sample is missing qubit " +
                                                std::to_string(q));
                }
                sum += spins[static_cast<std::size_t>(it->second)];
            }
            int value;
            if (sum > 0) {
                value = 1;
            } else if (sum < 0) {
                value = -1;
            } else {
                std::uint64_t coin =
                    derive_seed(derive_seed(seed, static_cast<std::uint64_t>(si)),
                                static_cast<std::uint64_t>(v));
                value = (coin >> 63) ? 1 : -1;
            }
            logical[static_cast<std::size_t>(v)] = value;
        }
        out.push_back(std::move(logical));
    }
    return out;
}

double chain_break_rate(const Assignment& a, const EmbeddedModel& em) {
    if (a.size() != static_cast<std::size_t>(em.physical.graph.num_vertices())) {
        throw std::invalid_argument("chain_break_rate: assignment size mismatch");
    }
    if (em.logical_n == 0) return 0.0;
    int broken = 0;
    for (int v = 0; v < em.logical_n; ++v) {
        for (int fi : em.ferro_of[static_cast<std::size_t>(v)]) {
            const FerroEdge& fe = em.ferro_edges[static_cast<std::size_t>(fi)];
            if (a[static_cast<std::size_t>(fe.u)] != a[static_cast<std::size_t>(fe.v)]) {
                ++broken;
                break;
            }
        }
    }
    return static_cast<double>(broken) / static_cast<double>(em.logical_n);
}

// pos[i] = index into each sample's spins for dense physical vertex i
static std::vector<int> sample_positions(const SampleSet& ss, const EmbeddedModel& em) {
    const std::size_t n = em.qubit_of.size();
    std::vector<int> pos(n);
    if (ss.labels.empty()) {
        for (std::size_t i = 0; i < n; ++i) pos[i] = static_cast<int>(i);
        return pos;
    }
    std::map<int, int> by_label;
    for (std::size_t i = 0; i < ss.labels.size(); ++i) {
        by_label[ss.labels[i]] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < n; ++i) {
        auto it = by_label.find(em.qubit_of[i]);
        if (it == by_label.end()) {
            throw std::invalid_argument("sample set is missing qubit " +
                                        std::to_string(em.qubit_of[i]));
        }
        pos[i] = it->second;
    }
    return pos;
}

double avg_chain_break_rate(const SampleSet& ss, const EmbeddedModel& em) {
    if (ss.samples.empty() || ss.total_occurrences() <= 0) {
        throw std::invalid_argument("avg_chain_break_rate: empty sample set");
    }
    const std::vector<int> pos = sample_positions(ss, em);
    double weighted = 0.0;
    std::int64_t total = 0;
    for (const Sample& s : ss.samples) {
        int broken = 0;
        for (int v = 0; v < em.logical_n; ++v) {
            for (int fi : em.ferro_of[static_cast<std::size_t>(v)]) {
                const FerroEdge& fe = em.ferro_edges[static_cast<std::size_t>(fi)];
                if (s.spins[static_cast<std::size_t>(pos[static_cast<std::size_t>(fe.u)])] !=
                    s.spins[static_cast<std::size_t>(pos[static_cast<std::size_t>(fe.v)])]) {
                    ++broken;
                    break;
                }
            }
        }
        double rate = em.logical_n == 0
                          ? 0.0
                          : static_cast<double>(broken) / static_cast<double>(em.logical_n);
        weighted += rate * static_cast<double>(s.occurrences);
        total += s.occurrences;
    }
    return weighted / static_cast<double>(total);
}

CorruptionStats coupler_corruption_stats(const SampleSet& ss, const EmbeddedModel& em) {
    CorruptionStats stats;
    stats.per_edge_counts.assign(em.ferro_edges.size(), 0);
    if (em.ferro_edges.empty() || ss.samples.empty()) return stats;

    const std::vector<int> pos = sample_positions(ss, em);
    for (const Sample& s : ss.samples) {
        std::vector<int> per_vertex(static_cast<std::size_t>(em.logical_n), 0);
        for (std::size_t fi = 0; fi < em.ferro_edges.size(); ++fi) {
            const FerroEdge& fe = em.ferro_edges[fi];
            if (s.spins[static_cast<std::size_t>(pos[static_cast<std::size_t>(fe.u)])] !=
                s.spins[static_cast<std::size_t>(pos[static_cast<std::size_t>(fe.v)])]) {
                stats.per_edge_counts[fi] += s.occurrences;
                ++per_vertex[static_cast<std::size_t>(fe.logical)];
            }
        }
        for (int v = 0; v < em.logical_n; ++v) {
            int c = per_vertex[static_cast<std::size_t>(v)];
            if (c > 0) stats.simultaneous[c] += s.occurrences;
        }
    }

    std::int64_t total = 0;
    for (std::int64_t c : stats.per_edge_counts) {
        total += c;
        if (c > 0) ++stats.distinct_corrupted;
    }
    stats.mean_count = static_cast<double>(total) / static_cast<double>(stats.per_edge_counts.size());
    std::vector<std::int64_t> sorted = stats.per_edge_counts;
    std::sort(sorted.begin(), sorted.end());
    const std::size_t mid = sorted.size() / 2;
    stats.median_count = sorted.size() % 2 == 1
                             ? static_cast<double>(sorted[mid])
                             : 0.5 * (static_cast<double>(sorted[mid - 1]) +
                                      static_cast<double>(sorted[mid]));
    return stats;
}

ChainLengthHistogram chain_length_histogram(const Embedding& e) {
    ChainLengthHistogram hist;
    for (const auto& [v, chain] : e.phi) {
        ++hist.counts[static_cast<int>(chain.size())];
        hist.total_qubits += static_cast<int>(chain.size());
    }
    return hist;
}

double embedding_ratio(const std::vector<int>& cmr_counts, const std::vector<int>& cme_counts) {
    if (cmr_counts.empty() || cmr_counts.size() != cme_counts.size()) {
        throw std::invalid_argument("embedding_ratio: need equal, non-empty count lists");
    }
    double sum = 0.0;
    for (std::size_t i = 0; i < cmr_counts.size(); ++i) {
        if (cmr_counts[i] <= 0 || cme_counts[i] <= 0) {
            throw std::invalid_argument("embedding_ratio: counts must be positive");
        }
        sum += static_cast<double>(cmr_counts[i]) / static_cast<double>(cme_counts[i]);
    }
    return sum / static_cast<double>(cmr_counts.size());
}

// ---------------------------------------------------------------------------
// logical-qubit encodings

VertexEncoding encode_vertex(const Graph& source, int v, int num_qubits, ChainShape shape) {
    const int n = source.num_vertices();
    if (v < 0 || v >= n) throw std::invalid_argument("encode_vertex: vertex out of range");
    if (num_qubits < 1) throw std::invalid_argument("encode_vertex: need at least one qubit");

    // chain qubits in wiring order: v itself, then fresh ids past the others
    std::vector<int> chain{v};
    for (int extra = 0; extra < num_qubits - 1; ++extra) chain.push_back(n + extra);

    std::vector<int> qubits;
    for (int u = 0; u < n; ++u) qubits.push_back(u);
    for (int extra = 0; extra < num_qubits - 1; ++extra) qubits.push_back(n + extra);

    std::vector<Edge> couplers;
    std::vector<int> nbrs = source.neighbors(v);
    std::sort(nbrs.begin(), nbrs.end());
    for (const Edge& se : source.edges()) {
        if (se.first == v || se.second == v) continue;
        couplers.push_back(se);
    }
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
        couplers.push_back(make_edge(nbrs[i], chain[i % chain.size()]));
    }
    if (num_qubits >= 2) {
        for (int i = 0; i + 1 < num_qubits; ++i) {
            couplers.push_back(make_edge(chain[static_cast<std::size_t>(i)],
                                         chain[static_cast<std::size_t>(i) + 1]));
        }
        if (shape != ChainShape::chain && num_qubits >= 3) {
            couplers.push_back(make_edge(chain.back(), chain.front()));
        }
        if (shape == ChainShape::clique) {
            for (int i = 0; i < num_qubits; ++i) {
                for (int j = i + 2; j < num_qubits; ++j) {
                    if (i == 0 && j == num_qubits - 1) continue;  // cycle edge already present
                    couplers.push_back(make_edge(chain[static_cast<std::size_t>(i)],
                                                 chain[static_cast<std::size_t>(j)]));
                }
            }
        }
    }

    VertexEncoding enc;
    enc.target = Topology(std::move(qubits), std::move(couplers));
    for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        enc.embedding.phi[u] = {u};
    }
    std::sort(chain.begin(), chain.end());
    enc.embedding.phi[v] = chain;
    return enc;
}

}  // namespace chaingauge
