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
#include <functional>
#include <stdexcept>

#include <doctest.h>

#include "chaingauge/bounds.hpp"
#include "chaingauge/sampler.hpp"
#include "chaingauge/tuner.hpp"
#include "test_util.hpp"

using namespace chaingauge;

namespace {

// Path-of-chains fixture: n logical vertices, chain v = {2v, 2v+1}.
struct Fixture {
    Graph source;
    Topology target;
    Embedding embedding;
    IsingModel model;

    explicit Fixture(int n_logical) {
        source = Graph(n_logical);
        for (int v = 0; v + 1 < n_logical; ++v) source.add_edge(v, v + 1);
        std::vector<int> qubits;
        std::vector<Edge> couplers;
        for (int v = 0; v < n_logical; ++v) {
            qubits.push_back(2 * v);
            qubits.push_back(2 * v + 1);
            couplers.push_back({2 * v, 2 * v + 1});
            if (v + 1 < n_logical) couplers.push_back({2 * v + 1, 2 * v + 2});
            embedding.phi[v] = {2 * v, 2 * v + 1};
        }
        target = Topology(std::move(qubits), std::move(couplers));
        model = maxcut_to_ising(source);
    }

    EmbeddedModelBuilder builder() const {
        return [this](double cs) { return embed_model(model, embedding, target, cs); };
    }
};

// Mock backend with an exact, deterministic break-rate response. The chain
// strength is recovered from the most negative coupler of the physical model;
// the requested rate is realized through occurrence weighting of a fully
// broken and a fully aligned sample, so shots * rate must be integral.
SamplerFn mock_rate_sampler(const std::function<double(double)>& rate_of_cs) {
    return [rate_of_cs](const IsingModel& physical, std::int64_t shots, std::uint64_t seed) {
        double cs = 0.0;
        for (double j : physical.j) cs = std::max(cs, -j);
        double rate = rate_of_cs(cs);
        auto broken_occ = static_cast<std::int64_t>(std::llround(rate * static_cast<double>(shots)));

        const auto n = static_cast<std::size_t>(physical.graph.num_vertices());
        Assignment all_broken(n);
        for (std::size_t q = 0; q < n; ++q) all_broken[q] = q % 2 == 0 ? 1 : -1;
        Assignment aligned(n, 1);

        SampleSet ss;
        ss.shots = shots;
        ss.seed = seed;
        if (broken_occ > 0) ss.samples.push_back({all_broken, 0.0, broken_occ});
        if (shots - broken_occ > 0) ss.samples.push_back({aligned, 0.0, shots - broken_occ});
        return ss;
    };
}

}  // namespace

TEST_CASE("tuner config validation") {
    TunerConfig config;
    config.cb_interval = {0.2, 0.1};
    CHECK_THROWS_AS(config.check(), std::invalid_argument);
    config = TunerConfig{};
    config.cb_interval = {0.1, 1.5};
    CHECK_THROWS_AS(config.check(), std::invalid_argument);
    config = TunerConfig{};
    config.cs_interval = {{3.0, 2.0}};
    CHECK_THROWS_AS(config.check(), std::invalid_argument);
    config = TunerConfig{};
    config.shots_per_step = 0;
    CHECK_THROWS_AS(config.check(), std::invalid_argument);
}

TEST_CASE("hand-traced linear-response search") {
    Fixture fx(8);
    TunerConfig config;
    config.cb_interval = {0.1, 0.2};
    config.cs_interval = {{0.0, 10.0}};
    config.shots_per_step = 8;

    TunerTrace trace = binary_search_chain_strength(
        fx.builder(), mock_rate_sampler([](double cs) { return std::max(0.0, 0.5 - 0.05 * cs); }),
        config);

    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[0].step == 1);
    CHECK(trace.steps[0].cs == 5.0);
    CHECK(trace.steps[0].break_rate == 0.25);
    CHECK(trace.steps[0].lo == 5.0);
    CHECK(trace.steps[0].hi == 10.0);
    CHECK(trace.steps[1].step == 2);
    CHECK(trace.steps[1].cs == 7.5);
    CHECK(trace.steps[1].break_rate == 0.125);
    CHECK(trace.converged);
    CHECK(trace.final_cs == 7.5);
}

TEST_CASE("hand-traced step-response search with the reported window") {
    Fixture fx(4);
    TunerConfig config;
    config.cb_interval = {6e-3, 2e-2};
    config.cs_interval = {{0.0, 8.0}};
    config.shots_per_step = 100;

    TunerTrace trace = binary_search_chain_strength(
        fx.builder(), mock_rate_sampler([](double cs) { return cs < 5.0 ? 1.0 : 0.01; }),
        config);

    REQUIRE(trace.steps.size() == 2);
    CHECK(trace.steps[0].cs == 4.0);
    CHECK(trace.steps[0].break_rate == 1.0);
    CHECK(trace.steps[0].lo == 4.0);
    CHECK(trace.steps[1].cs == 6.0);
    CHECK(trace.steps[1].break_rate == 0.01);
    CHECK(trace.converged);
    CHECK(trace.final_cs == 6.0);
    CHECK(trace.steps.size() == 2);
}

TEST_CASE("window spanning everything converges immediately") {
    Fixture fx(4);
    TunerConfig config;
    config.cb_interval = {0.0, 1.0};
    config.cs_interval = {{0.0, 4.0}};
    config.shots_per_step = 4;
    TunerTrace trace = binary_search_chain_strength(
        fx.builder(), mock_rate_sampler([](double) { return 0.5; }), config);
    CHECK(trace.converged);
    CHECK(trace.steps.size() == 1);
    CHECK(trace.final_cs == 2.0);
}

TEST_CASE("unconverged guards") {
    Fixture fx(4);
    SUBCASE("rate stuck above the window keeps the upper bound") {
        TunerConfig config;
        config.cb_interval = {0.1, 0.2};
        config.cs_interval = {{0.0, 8.0}};
        config.shots_per_step = 4;
        TunerTrace trace = binary_search_chain_strength(
            fx.builder(), mock_rate_sampler([](double) { return 0.5; }), config);
        CHECK_FALSE(trace.converged);
        CHECK(trace.final_cs == 8.0);  // no tried cs had an acceptable rate
        int budget = static_cast<int>(std::ceil(std::log2(8.0 / (1e-3 * 8.0)))) + 1;
        CHECK(static_cast<int>(trace.steps.size()) <= budget);
    }
    SUBCASE("rate stuck below the window returns the smallest tried cs") {
        TunerConfig config;
        config.cb_interval = {0.1, 0.2};
        config.cs_interval = {{0.0, 8.0}};
        config.shots_per_step = 4;
        TunerTrace trace = binary_search_chain_strength(
            fx.builder(), mock_rate_sampler([](double) { return 0.0; }), config);
        CHECK_FALSE(trace.converged);
        CHECK(trace.final_cs == trace.steps.back().cs);  // midpoints shrink monotonically
        int budget = static_cast<int>(std::ceil(std::log2(8.0 / (1e-3 * 8.0)))) + 1;
        CHECK(static_cast<int>(trace.steps.size()) <= budget);
    }
    SUBCASE("max_steps stops the loop") {
        TunerConfig config;
        config.cb_interval = {0.1, 0.2};
        config.cs_interval = {{0.0, 8.0}};
        config.shots_per_step = 4;
        config.max_steps = 3;
        TunerTrace trace = binary_search_chain_strength(
            fx.builder(), mock_rate_sampler([](double) { return 0.5; }), config);
        CHECK(trace.steps.size() == 3);
        CHECK_FALSE(trace.converged);
    }
}

TEST_CASE("interval nesting and containment") {
    Fixture fx(8);
    TunerConfig config;
    config.cb_interval = {0.24, 0.26};  // narrow window the mock jumps across
    config.cs_interval = {{0.0, 8.0}};
    config.shots_per_step = 8;
    TunerTrace trace = binary_search_chain_strength(
        fx.builder(), mock_rate_sampler([](double cs) { return cs < 3.0 ? 0.5 : 0.125; }),
        config);
    double width = 8.0;
    double lo = 0.0, hi = 8.0;
    for (const TunerStep& step : trace.steps) {
        CHECK(step.lo >= lo);
        CHECK(step.hi <= hi);
        CHECK(step.hi - step.lo == doctest::Approx(width / 2.0));
        lo = step.lo;
        hi = step.hi;
        width /= 2.0;
        CHECK(step.cs >= trace.initial_interval.first);
        CHECK(step.cs <= trace.initial_interval.second);
    }
    CHECK(trace.final_cs >= trace.initial_interval.first);
    CHECK(trace.final_cs <= trace.initial_interval.second);
}

TEST_CASE("monotone response with a wide landing zone converges in-window") {
    Fixture fx(8);
    TunerConfig config;
    config.cb_interval = {0.2, 0.3};
    config.cs_interval = {{0.0, 8.0}};
    config.shots_per_step = 8;
    auto response = [](double cs) { return std::max(0.0, std::min(1.0, 1.0 - cs / 8.0)); };
    TunerTrace trace =
        binary_search_chain_strength(fx.builder(), mock_rate_sampler(response), config);
    CHECK(trace.converged);
    CHECK(trace.steps.back().break_rate >= 0.2);
    CHECK(trace.steps.back().break_rate <= 0.3);
}

TEST_CASE("default interval comes from the global bound") {
    Fixture fx(4);
    TunerConfig config;
    config.cb_interval = {0.0, 1.0};
    config.shots_per_step = 4;
    SUBCASE("with the logical model") {
        TunerTrace trace = binary_search_chain_strength(
            fx.builder(), mock_rate_sampler([](double) { return 0.0; }), config, &fx.model);
        CHECK(trace.initial_interval.first == 0.0);
        CHECK(trace.initial_interval.second == choi_bound_global(fx.model).magnitude);
    }
    SUBCASE("without it") {
        CHECK_THROWS_AS(binary_search_chain_strength(
                            fx.builder(), mock_rate_sampler([](double) { return 0.0; }), config),
                        std::invalid_argument);
    }
}

TEST_CASE("trace replay is bitwise reproducible with a real sampler") {
    Fixture fx(6);
    TunerConfig config;
    config.cb_interval = {0.05, 0.3};
    config.cs_interval = {{0.1, 4.0}};
    config.shots_per_step = 64;
    config.seed = 17;
    SamplerConfig sa;
    sa.sweeps = 16;
    TunerTrace a = binary_search_chain_strength(fx.builder(), make_sa_sampler(sa), config);
    TunerTrace b = binary_search_chain_strength(fx.builder(), make_sa_sampler(sa), config);
    REQUIRE(a.steps.size() == b.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        CHECK(a.steps[i].cs == b.steps[i].cs);
        CHECK(a.steps[i].break_rate == b.steps[i].break_rate);
        CHECK(a.steps[i].lo == b.steps[i].lo);
        CHECK(a.steps[i].hi == b.steps[i].hi);
    }
    CHECK(a.final_cs == b.final_cs);
    CHECK(a.converged == b.converged);
}

TEST_CASE("chain scan") {
    Fixture fx(4);
    SUBCASE("single point records the best unembedded cut") {
        SamplerConfig sa;
        sa.sweeps = 32;
        std::vector<ScanRecord> records =
            chain_scan(fx.builder(), make_sa_sampler(sa), {2.0}, 64, fx.source, 5);
        REQUIRE(records.size() == 1);
        CHECK(records[0].cs == 2.0);
        CHECK(records[0].best_cut == 3);  // the path P4 is bipartite: all edges cut
    }
    SUBCASE("identity embedding never breaks") {
        Graph source(3);
        source.add_edge(0, 1);
        source.add_edge(1, 2);
        Topology target({0, 1, 2}, {{0, 1}, {1, 2}});
        Embedding identity;
        for (int v = 0; v < 3; ++v) identity.phi[v] = {v};
        IsingModel m = maxcut_to_ising(source);
        EmbeddedModelBuilder build = [&](double cs) {
            return embed_model(m, identity, target, cs);
        };
        SamplerConfig sa;
        sa.sweeps = 8;
        std::vector<ScanRecord> records =
            chain_scan(build, make_sa_sampler(sa), {0.5, 1.0, 2.0}, 32, source, 3);
        for (const ScanRecord& r : records) CHECK(r.avg_break_rate == 0.0);
    }
    SUBCASE("break rate falls as chains strengthen") {
        SamplerConfig sa;
        sa.sweeps = 32;
        std::vector<ScanRecord> records = chain_scan(fx.builder(), make_sa_sampler(sa),
                                                     {0.05, 3.0}, 512, fx.source, 11);
        CHECK(records[0].avg_break_rate > records[1].avg_break_rate);
    }
    SUBCASE("argument checks") {
        SamplerConfig sa;
        CHECK_THROWS_AS(chain_scan(fx.builder(), make_sa_sampler(sa), {}, 8, fx.source, 0),
                        std::invalid_argument);
        CHECK_THROWS_AS(chain_scan(fx.builder(), make_sa_sampler(sa), {-1.0}, 8, fx.source, 0),
                        std::invalid_argument);
    }
}

TEST_CASE("plateau detection") {
    auto record = [](double cs, int cut) {
        ScanRecord r;
        r.cs = cs;
        r.best_cut = cut;
        return r;
    };
    SUBCASE("constant curve plateaus immediately") {
        std::vector<ScanRecord> records{record(1, 7), record(2, 7), record(3, 7)};
        CHECK(plateau_detect(records, 0.02) == 1.0);
    }
    SUBCASE("reported example") {
        std::vector<ScanRecord> records{record(1, 5), record(2, 9), record(3, 10), record(4, 10)};
        CHECK(plateau_detect(records, 0.02) == 3.0);
    }
    SUBCASE("strictly increasing curve plateaus at the end") {
        std::vector<ScanRecord> records{record(1, 5), record(2, 7), record(3, 9)};
        CHECK(plateau_detect(records, 0.02) == 3.0);
    }
    SUBCASE("too few records") {
        std::vector<ScanRecord> records{record(1, 5), record(2, 7)};
        CHECK_THROWS_AS(plateau_detect(records, 0.02), std::invalid_argument);
    }
}
