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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <doctest.h>

#include "chaingauge/errors.hpp"
#include "chaingauge/spectral.hpp"
#include "test_util.hpp"

using namespace chaingauge;

namespace {

IsingModel single_qubit(double h) {
    IsingModel m{Graph(1)};
    m.h[0] = h;
    return m;
}

std::vector<double> eigenvalues_at(const IsingModel& m, double s, const Schedule& sched) {
    Eigen::MatrixXd hmat = build_hamiltonian(m, s, sched);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hmat, Eigen::EigenvaluesOnly);
    std::vector<double> out(static_cast<std::size_t>(solver.eigenvalues().size()));
    for (int i = 0; i < solver.eigenvalues().size(); ++i) {
        out[static_cast<std::size_t>(i)] = solver.eigenvalues()[i];
    }
    return out;
}

}  // namespace

TEST_CASE("schedule validation and interpolation") {
    Schedule lin = Schedule::linear();
    CHECK(lin.a(0.0) == 1.0);
    CHECK(lin.a(1.0) == 0.0);
    CHECK(lin.a(0.25) == doctest::Approx(0.75));
    CHECK(lin.b(0.25) == doctest::Approx(0.25));

    CHECK_THROWS_AS(Schedule::from_points({0.0, 0.5}, {1, 0}, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Schedule::from_points({0.0, 0.5, 0.5, 1.0}, {1, 0.5, 0.5, 0},
                                          {0, 0.5, 0.5, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(Schedule::from_points({0.0}, {1}, {0}), std::invalid_argument);

    Schedule piecewise = Schedule::from_points({0.0, 0.4, 1.0}, {1.0, 0.2, 0.0},
                                               {0.0, 0.6, 1.0});
    CHECK(piecewise.a(0.2) == doctest::Approx(0.6));
    CHECK(piecewise.b(0.7) == doctest::Approx(0.8));
}

TEST_CASE("hamiltonian construction on hand cases") {
    Schedule lin = Schedule::linear();
    SUBCASE("diagonal problem term at s=1") {
        Eigen::MatrixXd h = build_hamiltonian(single_qubit(1.0), 1.0, lin);
        CHECK(h(0, 0) == 1.0);
        CHECK(h(1, 1) == -1.0);
        CHECK(h(0, 1) == 0.0);
    }
    SUBCASE("pure mixer at s=0") {
        Eigen::MatrixXd h = build_hamiltonian(single_qubit(1.0), 0.0, lin);
        CHECK(h(0, 0) == 0.0);
        CHECK(h(1, 1) == 0.0);
        CHECK(h(0, 1) == -1.0);
        CHECK(h(1, 0) == -1.0);
    }
    SUBCASE("two-qubit coupler spectrum at s=1") {
        Graph g(2);
        g.add_edge(0, 1);
        IsingModel m(std::move(g));
        m.set_j(0, 1, 1.0);
        Eigen::MatrixXd h = build_hamiltonian(m, 1.0, lin);
        CHECK(h(0, 0) == 1.0);
        CHECK(h(1, 1) == -1.0);
        CHECK(h(2, 2) == -1.0);
        CHECK(h(3, 3) == 1.0);
    }
    SUBCASE("bitwise symmetric") {
        IsingModel m = test_util::random_model(5, 0.5, 77);
        Eigen::MatrixXd h = build_hamiltonian(m, 0.37, lin);
        for (int r = 0; r < h.rows(); ++r) {
            for (int c = 0; c < h.cols(); ++c) CHECK(h(r, c) == h(c, r));
        }
    }
    SUBCASE("cap enforcement") {
        CHECK_THROWS_AS(build_hamiltonian(test_util::random_model(5, 0.5, 1), 0.5, lin, 4),
                        resource_limit_error);
    }
}

TEST_CASE("gap profile against the analytic two-level system") {
    // single qubit, h=1: E_pm(s) = pm sqrt((1-s)^2 + s^2)
    GapProfile profile = gap_profile(single_qubit(1.0), Schedule::linear(), 101, 2);
    for (std::size_t i = 0; i < profile.s.size(); ++i) {
        double s = profile.s[i];
        double expected = std::sqrt((1.0 - s) * (1.0 - s) + s * s);
        CHECK(std::abs(profile.levels[i][0] - (-expected)) <= 1e-9);
        CHECK(std::abs(profile.levels[i][1] - expected) <= 1e-9);
    }
}

TEST_CASE("spectrum at s=1 equals the sorted classical energies") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        IsingModel m = test_util::random_model(8, 0.4, seed);
        std::vector<double> classical;
        test_util::for_each_assignment(8, [&](const Assignment& a) {
            classical.push_back(test_util::oracle_energy(m, a));
        });
        std::sort(classical.begin(), classical.end());
        std::vector<double> quantum = eigenvalues_at(m, 1.0, Schedule::linear());
        REQUIRE(quantum.size() == classical.size());
        for (std::size_t i = 0; i < quantum.size(); ++i) {
            CHECK(std::abs(quantum[i] - classical[i]) <= 1e-9);
        }
    }
    SUBCASE("all-zero model") {
        IsingModel m{Graph(3)};
        for (double e : eigenvalues_at(m, 1.0, Schedule::linear())) {
            CHECK(std::abs(e) <= 1e-12);
        }
    }
}

TEST_CASE("eigenvalue continuity via the Weyl bound") {
    IsingModel m = test_util::random_model(5, 0.5, 9);
    Schedule lin = Schedule::linear();
    GapProfile profile = gap_profile(m, lin, 51, 1 << 5);
    double max_abs_diag = 0.0;
    test_util::for_each_assignment(5, [&](const Assignment& a) {
        max_abs_diag = std::max(max_abs_diag, std::abs(test_util::oracle_energy(m, a)));
    });
    for (std::size_t i = 0; i + 1 < profile.s.size(); ++i) {
        double da = std::abs(lin.a(profile.s[i + 1]) - lin.a(profile.s[i]));
        double db = std::abs(lin.b(profile.s[i + 1]) - lin.b(profile.s[i]));
        double bound = da * 5.0 + db * max_abs_diag + 1e-9;
        for (int level = 0; level < profile.k; ++level) {
            CHECK(std::abs(profile.levels[i + 1][static_cast<std::size_t>(level)] -
                           profile.levels[i][static_cast<std::size_t>(level)]) <= bound);
        }
    }
}

TEST_CASE("minimum gap") {
    SUBCASE("single qubit lands on sqrt(2) at the midpoint") {
        GapProfile profile = gap_profile(single_qubit(1.0), Schedule::linear(), 201, 2);
        MinGapResult result = min_gap(profile);
        CHECK(result.gap == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
        CHECK(result.s_star == 0.5);
        CHECK_FALSE(result.degenerate);
    }
    SUBCASE("field-free qubit is flagged degenerate") {
        GapProfile profile = gap_profile(single_qubit(0.0), Schedule::linear(), 51, 2);
        MinGapResult result = min_gap(profile);
        CHECK(result.degenerate);
    }
    SUBCASE("doubling the schedule doubles the gap at the same spot") {
        Schedule doubled = Schedule::from_points({0.0, 1.0}, {2.0, 0.0}, {0.0, 2.0});
        MinGapResult base = min_gap(gap_profile(single_qubit(1.0), Schedule::linear(), 101, 2));
        MinGapResult twice = min_gap(gap_profile(single_qubit(1.0), doubled, 101, 2));
        CHECK(twice.gap == doctest::Approx(2.0 * base.gap).epsilon(1e-12));
        CHECK(twice.s_star == base.s_star);
    }
    SUBCASE("refinement hits the analytic minimum") {
        GapProfile profile = gap_profile(single_qubit(1.0), Schedule::linear(), 101, 2);
        MinGapResult refined =
            min_gap_refined(single_qubit(1.0), Schedule::linear(), profile);
        CHECK(std::abs(refined.gap - std::sqrt(2.0)) <= 1e-6);
        CHECK(std::abs(refined.s_star - 0.5) <= 1e-6);
    }
}

TEST_CASE("rescaling correspondence formulas") {
    CHECK(rescaling_correspondence(0.0, 2.0).s1 == 0.0);
    CHECK(rescaling_correspondence(0.0, 2.0).factor == 1.0);
    CHECK(rescaling_correspondence(1.0, 2.0).s1 == 1.0);
    CHECK(rescaling_correspondence(1.0, 2.0).factor == doctest::Approx(0.5).epsilon(1e-15));
    RescalePoint mid = rescaling_correspondence(0.5, 2.0);
    CHECK(mid.s1 == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(mid.factor == doctest::Approx(0.75).epsilon(1e-15));
    CHECK_THROWS_AS(rescaling_correspondence(0.5, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rescaling_correspondence(1.5, 2.0), std::invalid_argument);
}

TEST_CASE("rescale_model") {
    IsingModel m = test_util::random_model(4, 0.6, 21);
    SUBCASE("alpha of one is the identity") {
        IsingModel same = rescale_model(m, 1.0);
        CHECK(same.h == m.h);
        CHECK(same.j == m.j);
    }
    SUBCASE("alpha of two halves every weight") {
        IsingModel half = rescale_model(m, 2.0);
        for (std::size_t i = 0; i < m.j.size(); ++i) CHECK(half.j[i] == m.j[i] / 2.0);
        for (std::size_t i = 0; i < m.h.size(); ++i) CHECK(half.h[i] == m.h[i] / 2.0);
    }
    SUBCASE("classical energies divide exactly") {
        IsingModel half = rescale_model(m, 2.0);
        test_util::for_each_assignment(4, [&](const Assignment& a) {
            CHECK(energy(half, a) == doctest::Approx(energy(m, a) / 2.0).epsilon(1e-12));
        });
    }
    CHECK_THROWS_AS(rescale_model(m, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(rescale_model(m, -2.0), std::invalid_argument);
}

TEST_CASE("rescaling identity holds level by level") {
    Schedule lin = Schedule::linear();
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
        IsingModel m = test_util::random_model(5, 0.5, seed + 40);
        GapProfile original = gap_profile(m, lin, 41, 2);
        for (double alpha : {1.5, 2.0, 5.0}) {
            IsingModel rescaled = rescale_model(m, alpha);
            double max_err = 0.0;
            for (double s2 : original.s) {
                RescalePoint point = rescaling_correspondence(s2, alpha);
                std::vector<double> left = eigenvalues_at(rescaled, s2, lin);
                std::vector<double> right = eigenvalues_at(m, point.s1, lin);
                for (std::size_t i = 0; i < left.size(); ++i) {
                    max_err = std::max(max_err, std::abs(left[i] - point.factor * right[i]));
                }
            }
            CHECK(max_err <= 1e-8);

            GapProfile rescaled_profile = gap_profile(rescaled, lin, 41, 2);
            CHECK(min_gap(rescaled_profile).gap <= min_gap(original).gap + 1e-12);
        }
    }
}

TEST_CASE("brute force ground states") {
    SUBCASE("single antiferromagnetic edge") {
        Graph g(2);
        g.add_edge(0, 1);
        IsingModel m(std::move(g));
        m.set_j(0, 1, 1.0);
        GroundStates gs = brute_force_ground(m);
        CHECK(gs.energy == -1.0);
        REQUIRE(gs.minimizers.size() == 2);
        CHECK(std::count(gs.minimizers.begin(), gs.minimizers.end(), Assignment{1, -1}) == 1);
        CHECK(std::count(gs.minimizers.begin(), gs.minimizers.end(), Assignment{-1, 1}) == 1);
    }
    SUBCASE("K3 max-cut has six minimizers") {
        Graph g(3);
        g.add_edge(0, 1);
        g.add_edge(0, 2);
        g.add_edge(1, 2);
        GroundStates gs = brute_force_ground(maxcut_to_ising(g));
        CHECK(gs.energy == -1.0);
        CHECK(gs.minimizers.size() == 6);
    }
    SUBCASE("negative field pins the spin up") {
        IsingModel m{Graph(1)};
        m.h[0] = -2.0;
        GroundStates gs = brute_force_ground(m);
        CHECK(gs.energy == -2.0);
        REQUIRE(gs.minimizers.size() == 1);
        CHECK(gs.minimizers[0] == Assignment{1});
    }
}

TEST_CASE("minimum maintaining strength") {
    SUBCASE("identity embedding needs no strength") {
        IsingModel m = test_util::random_model(3, 0.8, 5);
        Topology target({0, 1, 2}, [&] {
            std::vector<Edge> cs;
            for (const Edge& e : m.graph.edges()) cs.push_back(e);
            return cs;
        }());
        Embedding e;
        for (int v = 0; v < 3; ++v) e.phi[v] = {v};
        CHECK(min_maintaining_strength(m, e, target, 1e-4) == 0.0);
    }
    SUBCASE("a lonely split vertex is maintained by any positive strength") {
        IsingModel m{Graph(1)};
        m.h[0] = 1.0;
        Topology target({0, 1}, {{0, 1}});
        Embedding e;
        e.phi[0] = {0, 1};
        CHECK(min_maintaining_strength(m, e, target, 1e-4) <= 1e-4);
    }
    SUBCASE("denser encodings need weaker chains") {
        Graph source = gen_erdos_renyi(6, 0.6, 3);
        IsingModel m = maxcut_to_ising(source);
        int v = 0;
        for (int u = 0; u < 6; ++u) {
            if (source.degree(u) > source.degree(v)) v = u;
        }
        VertexEncoding chain = encode_vertex(source, v, 4, ChainShape::chain);
        VertexEncoding cycle = encode_vertex(source, v, 4, ChainShape::cycle);
        VertexEncoding clique = encode_vertex(source, v, 4, ChainShape::clique);
        double f_chain = min_maintaining_strength(m, chain.embedding, chain.target, 1e-4);
        double f_cycle = min_maintaining_strength(m, cycle.embedding, cycle.target, 1e-4);
        double f_clique = min_maintaining_strength(m, clique.embedding, clique.target, 1e-4);
        CHECK(f_clique <= f_cycle + 1e-3);
        CHECK(f_cycle <= f_chain + 1e-3);
    }
    SUBCASE("size cap") {
        Graph big(30);
        IsingModel m{big};
        Embedding e;
        for (int v = 0; v < 30; ++v) e.phi[v] = {v};
        std::vector<int> qubits(30);
        for (int q = 0; q < 30; ++q) qubits[static_cast<std::size_t>(q)] = q;
        Topology target(qubits, {});
        CHECK_THROWS_AS(min_maintaining_strength(m, e, target, 1e-4), resource_limit_error);
    }
}
