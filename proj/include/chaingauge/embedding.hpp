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
#include <map>
#include <optional>
#include <vector>

#include "chaingauge/ising.hpp"
#include "chaingauge/sample_set.hpp"
#include "chaingauge/topology.hpp"

namespace chaingauge {

// Chain strength magnitudes. Stored as positive values; the ferromagnetic
// sign is applied when the physical model is built.
class ChainStrength {
public:
    ChainStrength() = default;
    ChainStrength(double uniform) : uniform_(uniform) {}  // NOLINT: implicit by design
    explicit ChainStrength(std::map<int, double> per_chain)
        : per_chain_(std::move(per_chain)) {}

    bool empty() const { return !uniform_.has_value() && per_chain_.empty(); }
    bool is_uniform() const { return uniform_.has_value(); }
    std::optional<double> uniform_value() const { return uniform_; }
    const std::map<int, double>& per_chain() const { return per_chain_; }

    // Magnitude for one logical vertex; throws when unset.
    double for_vertex(int v) const;

private:
    std::optional<double> uniform_;
    std::map<int, double> per_chain_;
};

// Map from logical vertices to disjoint connected sets of physical qubits.
struct Embedding {
    std::map<int, std::vector<int>> phi;  // chains, each sorted ascending
    ChainStrength strength;               // optional stored magnitudes

    int total_qubits() const;
    const std::vector<int>& chain(int v) const;  // throws for unmapped vertices
};

// Outcome of checking the three minor-embedding conditions.
struct ValidityReport {
    bool chains_connected = true;  // condition 1
    bool chains_disjoint = true;   // condition 2
    bool edges_covered = true;     // condition 3
    std::vector<int> broken_chains;        // vertices with missing/disconnected chains
    std::vector<int> overlapping_vertices; // vertices sharing a qubit with another chain
    std::vector<Edge> uncovered_edges;     // source edges with no physical coupler

    bool valid() const { return chains_connected && chains_disjoint && edges_covered; }
};

// Checks conditions 1-3 for e against the source graph and target topology.
// Never throws; problems are reported, not raised.
ValidityReport validate(const Embedding& e, const Graph& source, const Topology& target);

// Deterministic clique embedding of K_{4m} into chimera(m, 4) by the cross
// construction: logical i occupies a vertical line in column i/4 and a
// horizontal line in row i/4, on lane i mod 4. Every chain has length 2m.
Embedding chimera_clique_embedding(int m);

// Randomized shortest-path embedder. Vertices are placed in degree-descending
// order (ties shuffled); each vertex lands on the free qubit minimizing the
// summed BFS distance to its already-placed neighbor chains and absorbs the
// union of those paths. A pruning pass then drops chain qubits that are not
// needed to keep the embedding valid. Retries with derived seeds up to
// max_tries; throws embedding_not_found when the budget is exhausted.
// An optional qubit budget rejects embeddings using more than that many
// physical qubits.
Embedding greedy_embed(const Graph& source, const Topology& target, std::uint64_t seed,
                       int max_tries = 32, std::optional<int> qubit_budget = std::nullopt);

// One ferromagnetic coupler inside a chain, in the dense physical index
// space, tagged with the logical vertex owning it.
struct FerroEdge {
    int u = 0;
    int v = 0;
    int logical = 0;
};

// Physical Ising model produced by weight spreading plus chain couplers.
// Vertices of `physical` are dense indices; qubit_of maps them back to
// physical qubit ids.
struct EmbeddedModel {
    IsingModel physical;
    std::vector<int> qubit_of;           // dense index -> qubit id, ascending
    std::map<int, int> index_of;         // qubit id -> dense index
    std::vector<FerroEdge> ferro_edges;
    std::vector<std::vector<int>> ferro_of;  // logical vertex -> indices into ferro_edges
    Embedding embedding;
    int logical_n = 0;
};

// Uniform logical weight spreading: h_v is split evenly over the chain's
// qubits, J_uv evenly over all physical couplers joining the two chains, and
// every target coupler internal to a chain becomes a ferromagnetic coupler
// of value -|F(v)|. Throws std::invalid_argument when the embedding is not
// valid for (model.graph, target) or a strength magnitude is not positive.
EmbeddedModel embed_model(const IsingModel& model, const Embedding& e,
                          const Topology& target, const ChainStrength& strength);

// Auto-scales the physical weights (chain couplers included) in place.
// Returns the division factor.
double autoscale_embedded(EmbeddedModel& em, Range h_range = kDefaultHRange,
                          Range j_range = kDefaultJRange);

// Majority vote per chain; exact ties are broken by a fair coin derived from
// (seed, sample index, logical vertex). One logical assignment per stored
// sample, in sample order.
std::vector<Assignment> unembed(const SampleSet& ss, const Embedding& e, std::uint64_t seed);

// Fraction of logical qubits whose chain has at least one antialigned
// ferromagnetic coupler in the given physical assignment.
double chain_break_rate(const Assignment& a, const EmbeddedModel& em);

// Occurrence-weighted mean of chain_break_rate over a sample set.
double avg_chain_break_rate(const SampleSet& ss, const EmbeddedModel& em);

struct CorruptionStats {
    std::vector<std::int64_t> per_edge_counts;  // parallel to em.ferro_edges
    double mean_count = 0.0;    // mean of per_edge_counts
    double median_count = 0.0;  // median of per_edge_counts
    int distinct_corrupted = 0; // edges corrupted in at least one shot
    // Shots-weighted histogram: number of simultaneously corrupted couplers
    // within one broken chain in one shot -> occurrences.
    std::map<int, std::int64_t> simultaneous;
};

CorruptionStats coupler_corruption_stats(const SampleSet& ss, const EmbeddedModel& em);

struct ChainLengthHistogram {
    std::map<int, int> counts;  // chain length -> number of logical vertices
    int total_qubits = 0;
};

ChainLengthHistogram chain_length_histogram(const Embedding& e);

// Mean elementwise ratio of qubit counts between two embedding methods.
double embedding_ratio(const std::vector<int>& cmr_counts, const std::vector<int>& cme_counts);

// Intra-chain coupler shape used when a single vertex is expanded into a
// multi-qubit logical encoding.
enum class ChainShape { chain, cycle, clique };

struct VertexEncoding {
    Topology target;
    Embedding embedding;
};

// Builds the target topology and embedding in which vertex v of `source` is
// represented by num_qubits physical qubits wired as the given shape, while
// every other vertex keeps a single qubit. Edges incident to v are attached
// round-robin over the chain so that only the intra-chain coupler set
// differs between shapes.
VertexEncoding encode_vertex(const Graph& source, int v, int num_qubits, ChainShape shape);

}  // namespace chaingauge
