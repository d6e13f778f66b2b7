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

#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "chaingauge/bounds.hpp"
#include "chaingauge/embedding.hpp"
#include "chaingauge/spectral.hpp"
#include "test_util.hpp"

using namespace chaingauge;

namespace {

Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    }
    return g;
}

}  // namespace

TEST_CASE("choi bound per node") {
    SUBCASE("hand sum of absolute values") {
        Graph g(3);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        IsingModel m(std::move(g));
        m.h[0] = 0.5;
        m.set_j(0, 1, 1.0);
        m.set_j(0, 2, -2.0);
        CHECK(choi_bound_node(m, 0) == 3.5);
    }
    SUBCASE("isolated vertex") {
        IsingModel m{Graph(1)};
        CHECK(choi_bound_node(m, 0) == 0.0);
    }
    SUBCASE("max-cut vertex of degree d") {
        for (int d : {2, 3, 5}) {
            IsingModel m = maxcut_to_ising(complete_graph(d + 1));
            CHECK(choi_bound_node(m, 0) == static_cast<double>(d));
        }
    }
    SUBCASE("unknown vertex") {
        IsingModel m{Graph(1)};
        CHECK_THROWS_AS(choi_bound_node(m, 1), std::invalid_argument);
    }
}

TEST_CASE("choi bound global") {
    SUBCASE("K3 max-cut") {
        BoundResult b = choi_bound_global(maxcut_to_ising(complete_graph(3)));
        CHECK(b.magnitude == 2.0);
        for (const auto& [v, value] : b.per_node) CHECK(value == 2.0);
    }
    SUBCASE("star K_{1,4}") {
        Graph g(5);
        for (int leaf = 1; leaf < 5; ++leaf) g.add_edge(0, leaf);
        BoundResult b = choi_bound_global(maxcut_to_ising(g));
        CHECK(b.magnitude == 4.0);
        CHECK(b.per_node.at(0) == 4.0);
        CHECK(b.per_node.at(1) == 1.0);
    }
    SUBCASE("single vertex field") {
        IsingModel m{Graph(1)};
        m.h[0] = 3.0;
        CHECK(choi_bound_global(m).magnitude == 3.0);
    }
    SUBCASE("magnitude dominates every per-node value") {
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            IsingModel m = test_util::random_model(8, 0.5, seed);
            BoundResult b = choi_bound_global(m);
            for (const auto& [v, value] : b.per_node) CHECK(b.magnitude >= value);
        }
    }
}

TEST_CASE("torque compensation arithmetic") {
    IsingModel k3 = maxcut_to_ising(complete_graph(3));
    // average degree 2, unit rms
    CHECK(torque_compensation(k3) == 1.414 * std::sqrt(2.0));

    Graph pair(2);
    pair.add_edge(0, 1);
    IsingModel edge(std::move(pair));
    edge.set_j(0, 1, 1.0);
    CHECK(torque_compensation(edge) == 1.414);

    edge.set_j(0, 1, 2.0);
    CHECK(torque_compensation(edge) == doctest::Approx(2.828).epsilon(1e-12));

    SUBCASE("prefactor override") {
        CHECK(torque_compensation(k3, std::sqrt(2.0)) == doctest::Approx(2.0).epsilon(1e-12));
    }
    SUBCASE("homogeneous of degree one in J") {
        IsingModel m = test_util::random_model(6, 0.6, 3);
        double base = torque_compensation(m);
        IsingModel scaled = m;
        for (double& j : scaled.j) j *= 2.5;
        CHECK(torque_compensation(scaled) == doctest::Approx(2.5 * base).epsilon(1e-12));
    }
    SUBCASE("no edges") {
        CHECK_THROWS_AS(torque_compensation(IsingModel{Graph(2)}), std::invalid_argument);
    }
}

TEST_CASE("raymond lambda") {
    SUBCASE("clique spin glass has unit variance") {
        for (int n : {4, 6}) {
            IsingModel m = maxcut_to_ising(complete_graph(n));
            Rng rng(static_cast<unsigned>(n));
            for (double& j : m.j) j = rng.coin() ? 1.0 : -1.0;
            CHECK(raymond_lambda(m, 0.7) ==
                  doctest::Approx(0.7 * std::sqrt(static_cast<double>(n))).epsilon(1e-12));
        }
    }
    SUBCASE("lambda0 of zero") {
        CHECK(raymond_lambda(maxcut_to_ising(complete_graph(3)), 0.0) == 0.0);
    }
    SUBCASE("K3 with unit couplers") {
        IsingModel m = maxcut_to_ising(complete_graph(3));
        CHECK(raymond_lambda(m, 1.0) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    }
    SUBCASE("needs two vertices") {
        CHECK_THROWS_AS(raymond_lambda(IsingModel{Graph(1)}, 1.0), std::invalid_argument);
    }
}

// The substantive guarantee behind using the global bound as the default
// search interval: just above it, no ground state of the embedded model
// breaks a chain, and unembedding recovers a logical optimum.
TEST_CASE("choi guarantee on fuzzed models and embeddings") {
    int cases = 0;
    for (std::uint64_t seed = 0; cases < 200; ++seed) {
        Rng rng(seed);
        int n = 2 + static_cast<int>(rng.below(4));
        IsingModel m = test_util::random_model(n, 0.6, seed + 10000);
        test_util::EmbeddingFixture fx =
            test_util::random_embedding(m.graph, seed + 20000, 3, 14);
        if (fx.embedding.total_qubits() > 14) continue;

        double f = choi_bound_global(m).magnitude + 1e-6;
        EmbeddedModel em = embed_model(m, fx.embedding, fx.target, f);
        GroundStates physical_ground = brute_force_ground(em.physical);
        auto [logical_energy, logical_arg] = test_util::oracle_ground(m);

        for (const Assignment& a : physical_ground.minimizers) {
            CHECK(chain_break_rate(a, em) == 0.0);
            SampleSet ss;
            ss.shots = 1;
            ss.samples.push_back({a, 0.0, 1});
            ss.labels = em.qubit_of;
            Assignment logical = unembed(ss, fx.embedding, seed)[0];
            CHECK(energy(m, logical) == doctest::Approx(logical_energy).epsilon(1e-9));
        }
        ++cases;
    }
    CHECK(cases == 200);
}
