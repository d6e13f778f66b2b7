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

// Batch front-end: instance generation, embedding, bounds, spectral analysis,
// chain scans and tuning. JSON in, CSV/JSON out. Every output file is
// accompanied by a <file>.manifest.json recording the resolved parameters,
// seeds and input digests; re-running a command with the same inputs and
// seeds reproduces the outputs byte for byte.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chaingauge/bounds.hpp"
#include "chaingauge/embedding.hpp"
#include "chaingauge/errors.hpp"
#include "chaingauge/ising.hpp"
#include "chaingauge/json_io.hpp"
#include "chaingauge/sampler.hpp"
#include "chaingauge/spectral.hpp"
#include "chaingauge/topology.hpp"
#include "chaingauge/tuner.hpp"
#include "chaingauge/version.hpp"

using nlohmann::json;
using namespace chaingauge;

namespace {

std::string fmt_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fnv1a64(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    char c;
    while (in.get(c)) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001b3ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

// One manifest per command invocation, written next to each produced file.
struct Manifest {
    std::string command;
    json parameters = json::object();
    json inputs = json::object();

    void add_input(const std::string& name, const std::string& path) {
        inputs[name] = {{"path", path}, {"digest", fnv1a64(path)}};
    }

    void write_for(const std::string& output_path) const {
        json j;
        j["command"] = command;
        j["version"] = kVersion;
        j["parameters"] = parameters;
        j["inputs"] = inputs;
        j["output"] = output_path;
        save_json(output_path + ".manifest.json", j);
    }
};

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << content;
}

int env_qubit_cap() {
    const char* raw = std::getenv("CHAINGAUGE_QUBIT_CAP");
    if (raw == nullptr) return kDefaultQubitCap;
    int cap = std::atoi(raw);
    if (cap < 1) throw std::invalid_argument("CHAINGAUGE_QUBIT_CAP must be a positive integer");
    return cap;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> values;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) values.push_back(std::stod(token));
    }
    return values;
}

std::set<int> parse_int_set(const std::string& csv) {
    std::set<int> values;
    std::stringstream stream(csv);
    std::string token;
    while (std::getline(stream, token, ',')) {
        if (!token.empty()) values.insert(std::stoi(token));
    }
    return values;
}

Schedule load_schedule_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("schedule CSV: empty file");
    std::vector<double> s, a, b;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream row(line);
        std::string cell;
        double values[3];
        for (int i = 0; i < 3; ++i) {
            if (!std::getline(row, cell, ',')) {
                throw std::invalid_argument("schedule CSV: need s,a,b columns");
            }
            values[i] = std::stod(cell);
        }
        s.push_back(values[0]);
        a.push_back(values[1]);
        b.push_back(values[2]);
    }
    return Schedule::from_points(std::move(s), std::move(a), std::move(b));
}

std::string profile_csv(const GapProfile& profile) {
    std::ostringstream out;
    out << "s";
    for (int e = 0; e < profile.k; ++e) out << ",E" << e;
    out << "\n";
    for (std::size_t i = 0; i < profile.s.size(); ++i) {
        out << fmt_double(profile.s[i]);
        for (double level : profile.levels[i]) out << "," << fmt_double(level);
        out << "\n";
    }
    return out.str();
}

std::string trace_csv(const TunerTrace& trace) {
    std::ostringstream out;
    out << "step,cs,chain_break_rate,lo,hi,converged\n";
    for (const TunerStep& step : trace.steps) {
        bool last = step.step == static_cast<int>(trace.steps.size());
        out << step.step << "," << fmt_double(step.cs) << "," << fmt_double(step.break_rate)
            << "," << fmt_double(step.lo) << "," << fmt_double(step.hi) << ","
            << (last && trace.converged ? 1 : 0) << "\n";
    }
    return out.str();
}

std::string scan_csv(const std::vector<ScanRecord>& records) {
    std::ostringstream out;
    out << "cs,best_cut,mean_energy,avg_break_rate,distinct_corrupted\n";
    for (const ScanRecord& r : records) {
        out << fmt_double(r.cs) << "," << r.best_cut << "," << fmt_double(r.mean_energy) << ","
            << fmt_double(r.avg_break_rate) << "," << r.corruption.distinct_corrupted << "\n";
    }
    return out.str();
}

json min_gap_json(const MinGapResult& result) {
    json j;
    j["min_gap"] = result.gap;
    j["s_star"] = result.s_star;
    j["degenerate"] = result.degenerate;
    if (result.degenerate) j["gap_above_degenerate"] = result.gap_above_degenerate;
    return j;
}

// ---------------------------------------------------------------------------

struct GenArgs {
    std::string type;
    int n = 0;
    double p = 0.5;
    int d = 3;
    std::uint64_t seed = 0;
    bool maxcut = false;
    std::string out;
};

void run_gen(const GenArgs& args) {
    Graph g;
    if (args.type == "er") {
        g = gen_erdos_renyi(args.n, args.p, args.seed);
    } else if (args.type == "dreg") {
        g = gen_d_regular(args.n, args.d, args.seed);
    } else {
        throw std::invalid_argument("gen: --type must be er or dreg");
    }
    json out = args.maxcut ? model_to_json(maxcut_to_ising(g)) : graph_to_json(g);
    save_json(args.out, out);

    Manifest manifest;
    manifest.command = "gen";
    manifest.parameters = {{"type", args.type}, {"n", args.n},      {"p", args.p},
                           {"d", args.d},       {"seed", args.seed}, {"maxcut", args.maxcut}};
    manifest.write_for(args.out);
}

struct TopoArgs {
    int m = 1;
    int l = 4;
    std::string in;
    std::string remove_list;
    std::string out;
};

void run_topo(const TopoArgs& args) {
    Topology topo;
    Manifest manifest;
    manifest.command = "topo";
    if (!args.in.empty()) {
        topo = topology_from_json(load_json(args.in));
        manifest.add_input("topology", args.in);
    } else {
        topo = chimera(args.m, args.l);
    }
    if (!args.remove_list.empty()) {
        topo = remove_qubits(topo, parse_int_set(args.remove_list));
    }
    save_json(args.out, topology_to_json(topo));
    manifest.parameters = {{"m", args.m},
                           {"l", args.l},
                           {"remove", args.remove_list},
                           {"from_file", !args.in.empty()}};
    manifest.write_for(args.out);
}

struct EmbedArgs {
    std::string method;
    std::string graph;
    std::string topo;
    std::string embedding;
    int m = 1;
    std::uint64_t seed = 0;
    int max_tries = 32;
    int budget = 0;
    std::string out;
    std::string topo_out;
};

void run_embed(const EmbedArgs& args) {
    Manifest manifest;
    manifest.command = "embed";
    manifest.parameters = {{"method", args.method}, {"seed", args.seed},
                           {"max_tries", args.max_tries}, {"budget", args.budget},
                           {"m", args.m}};
    if (args.method == "greedy") {
        if (args.graph.empty() || args.topo.empty() || args.out.empty()) {
            throw std::invalid_argument("embed greedy: need --graph, --topo and -o");
        }
        Graph g = graph_from_json(load_json(args.graph));
        Topology topo = topology_from_json(load_json(args.topo));
        std::optional<int> budget;
        if (args.budget > 0) budget = args.budget;
        Embedding e = greedy_embed(g, topo, args.seed, args.max_tries, budget);
        save_json(args.out, embedding_to_json(e));
        manifest.add_input("graph", args.graph);
        manifest.add_input("topology", args.topo);
        manifest.write_for(args.out);
    } else if (args.method == "clique") {
        if (args.out.empty()) throw std::invalid_argument("embed clique: need -o");
        Embedding e = chimera_clique_embedding(args.m);
        save_json(args.out, embedding_to_json(e));
        manifest.write_for(args.out);
        if (!args.topo_out.empty()) {
            save_json(args.topo_out, topology_to_json(chimera(args.m, 4)));
            manifest.write_for(args.topo_out);
        }
    } else if (args.method == "validate") {
        if (args.graph.empty() || args.topo.empty() || args.embedding.empty()) {
            throw std::invalid_argument("embed validate: need --graph, --topo and --embedding");
        }
        Graph g = graph_from_json(load_json(args.graph));
        Topology topo = topology_from_json(load_json(args.topo));
        Embedding e = embedding_from_json(load_json(args.embedding));
        ValidityReport report = validate(e, g, topo);
        json j;
        j["valid"] = report.valid();
        j["chains_connected"] = report.chains_connected;
        j["chains_disjoint"] = report.chains_disjoint;
        j["edges_covered"] = report.edges_covered;
        j["broken_chains"] = report.broken_chains;
        j["overlapping_vertices"] = report.overlapping_vertices;
        json uncovered = json::array();
        for (const Edge& e2 : report.uncovered_edges) uncovered.push_back({e2.first, e2.second});
        j["uncovered_edges"] = uncovered;
        if (args.out.empty()) {
            std::cout << j.dump(2) << "\n";
        } else {
            save_json(args.out, j);
            manifest.add_input("graph", args.graph);
            manifest.add_input("topology", args.topo);
            manifest.add_input("embedding", args.embedding);
            manifest.write_for(args.out);
        }
    } else {
        throw std::invalid_argument("embed: --method must be greedy, clique or validate");
    }
}

struct BoundsArgs {
    std::string method;
    std::string model;
    double prefactor = 1.414;
    double lambda0 = 1.0;
    std::string out;
};

void run_bounds(const BoundsArgs& args) {
    IsingModel model = model_from_json(load_json(args.model));
    BoundResult result;
    if (args.method == "choi") {
        result = choi_bound_global(model);
    } else if (args.method == "torque") {
        result.magnitude = torque_compensation(model, args.prefactor);
    } else if (args.method == "raymond") {
        result.magnitude = raymond_lambda(model, args.lambda0);
    } else {
        throw std::invalid_argument("bounds: --method must be choi, torque or raymond");
    }
    json j = bound_to_json(result, args.method);
    if (args.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        save_json(args.out, j);
        Manifest manifest;
        manifest.command = "bounds";
        manifest.parameters = {{"method", args.method},
                               {"prefactor", args.prefactor},
                               {"lambda0", args.lambda0}};
        manifest.add_input("model", args.model);
        manifest.write_for(args.out);
    }
}

struct GapArgs {
    std::string model;
    std::string schedule;
    int points = 201;
    int k = 2;
    bool refine = false;
    double degeneracy_tol = 1e-9;
    std::string out;
    std::string min_gap_out;
    double rescale_alpha = 0.0;
    std::string rescale_out;
};

void run_gap(const GapArgs& args) {
    const int cap = env_qubit_cap();
    IsingModel model = model_from_json(load_json(args.model));
    Schedule schedule = args.schedule.empty() ? Schedule::linear()
                                              : load_schedule_csv(args.schedule);

    Manifest manifest;
    manifest.command = "gap";
    manifest.parameters = {{"points", args.points},   {"k", args.k},
                           {"refine", args.refine},   {"degeneracy_tol", args.degeneracy_tol},
                           {"qubit_cap", cap},        {"rescale_alpha", args.rescale_alpha}};
    manifest.add_input("model", args.model);
    if (!args.schedule.empty()) manifest.add_input("schedule", args.schedule);

    GapProfile profile = gap_profile(model, schedule, args.points, args.k, cap);
    if (!args.out.empty()) {
        write_text(args.out, profile_csv(profile));
        manifest.write_for(args.out);
    }

    MinGapResult result = args.refine
                              ? min_gap_refined(model, schedule, profile, args.degeneracy_tol,
                                                1e-9, cap)
                              : min_gap(profile, args.degeneracy_tol);
    if (!args.min_gap_out.empty()) {
        save_json(args.min_gap_out, min_gap_json(result));
        manifest.write_for(args.min_gap_out);
    }

    if (args.rescale_alpha > 0.0) {
        IsingModel rescaled = rescale_model(model, args.rescale_alpha);
        double max_err = 0.0;
        for (double s2 : profile.s) {
            RescalePoint point = rescaling_correspondence(s2, args.rescale_alpha);
            Eigen::MatrixXd h2 = build_hamiltonian(rescaled, s2, schedule, cap);
            Eigen::MatrixXd h1 = build_hamiltonian(model, point.s1, schedule, cap);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver2(h2, Eigen::EigenvaluesOnly);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver1(h1, Eigen::EigenvaluesOnly);
            for (int e = 0; e < solver2.eigenvalues().size(); ++e) {
                double expected = point.factor * solver1.eigenvalues()[e];
                max_err = std::max(max_err, std::abs(solver2.eigenvalues()[e] - expected));
            }
        }
        GapProfile rescaled_profile = gap_profile(rescaled, schedule, args.points, args.k, cap);
        MinGapResult original_gap = min_gap(profile, args.degeneracy_tol);
        MinGapResult rescaled_gap = min_gap(rescaled_profile, args.degeneracy_tol);
        json report;
        report["alpha"] = args.rescale_alpha;
        report["max_abs_error"] = max_err;
        report["min_gap_original"] = original_gap.gap;
        report["min_gap_rescaled"] = rescaled_gap.gap;
        if (args.rescale_out.empty()) {
            std::cout << report.dump(2) << "\n";
        } else {
            save_json(args.rescale_out, report);
            manifest.write_for(args.rescale_out);
        }
    } else if (args.out.empty() && args.min_gap_out.empty()) {
        std::cout << min_gap_json(result).dump(2) << "\n";
    }
}

struct SampleArgs {
    std::string backend;
    std::string model;
    std::string embedding;
    std::string topo;
    double cs = 0.0;
    bool no_autoscale = false;
    std::int64_t shots = 128;
    std::uint64_t seed = 0;
    double beta = 1.0;
    int sweeps = 128;
    double beta_hot = 0.1;
    double beta_cold = 10.0;
    int threads = 1;
    std::string in;
    std::string out;
};

void run_sample(const SampleArgs& args) {
    Manifest manifest;
    manifest.command = "sample";
    manifest.parameters = {{"backend", args.backend}, {"shots", args.shots},
                           {"seed", args.seed},       {"beta", args.beta},
                           {"sweeps", args.sweeps},   {"beta_hot", args.beta_hot},
                           {"beta_cold", args.beta_cold}, {"threads", args.threads},
                           {"cs", args.cs},           {"autoscale", !args.no_autoscale}};

    if (args.backend == "replay") {
        if (args.in.empty()) throw std::invalid_argument("sample replay: need --in");
        SampleSet ss;
        if (!args.model.empty()) {
            IsingModel model = model_from_json(load_json(args.model));
            ss = replay_sample(args.in, &model);
            manifest.add_input("model", args.model);
        } else {
            ss = replay_sample(args.in);
        }
        manifest.add_input("replay", args.in);
        if (!args.out.empty()) {
            save_json(args.out, sampleset_to_json(ss));
            manifest.write_for(args.out);
        } else {
            std::cout << "replayed " << ss.shots << " shots, " << ss.samples.size()
                      << " distinct samples\n";
        }
        return;
    }

    if (args.model.empty() || args.out.empty()) {
        throw std::invalid_argument("sample: need --model and -o");
    }
    IsingModel model = model_from_json(load_json(args.model));
    manifest.add_input("model", args.model);

    IsingModel target_model = model;
    std::vector<int> labels;
    if (!args.embedding.empty() || !args.topo.empty()) {
        if (args.embedding.empty() || args.topo.empty()) {
            throw std::invalid_argument("sample: --embedding and --topo go together");
        }
        Embedding e = embedding_from_json(load_json(args.embedding));
        Topology topo = topology_from_json(load_json(args.topo));
        ChainStrength strength = args.cs > 0.0 ? ChainStrength(args.cs) : e.strength;
        EmbeddedModel em = embed_model(model, e, topo, strength);
        if (!args.no_autoscale) autoscale_embedded(em);
        target_model = em.physical;
        labels = em.qubit_of;
        manifest.add_input("embedding", args.embedding);
        manifest.add_input("topology", args.topo);
    }

    SampleSet ss;
    if (args.backend == "gibbs") {
        ss = gibbs_sample(target_model, args.beta, args.shots, args.seed);
    } else if (args.backend == "sa") {
        SamplerConfig config;
        config.shots = args.shots;
        config.seed = args.seed;
        config.sweeps = args.sweeps;
        config.beta_hot = args.beta_hot;
        config.beta_cold = args.beta_cold;
        config.threads = args.threads;
        ss = sa_sample(target_model, config);
    } else {
        throw std::invalid_argument("sample: --backend must be gibbs, sa or replay");
    }
    ss.labels = std::move(labels);
    save_json(args.out, sampleset_to_json(ss));
    manifest.write_for(args.out);
}

struct ScanArgs {
    std::string model;
    std::string embedding;
    std::string topo;
    std::string cs_list;
    double cs_min = 0.0;
    double cs_max = 0.0;
    int cs_points = 12;
    std::int64_t shots = 1024;
    std::uint64_t seed = 0;
    std::string backend = "sa";
    double beta = 1.0;
    int sweeps = 128;
    double beta_hot = 0.1;
    double beta_cold = 10.0;
    int threads = 1;
    bool no_autoscale = false;
    double plateau_tol = -1.0;
    std::string out;
};

struct EmbeddedPipeline {
    IsingModel model;
    Embedding embedding;
    Topology topo;
    bool autoscale_on = true;

    EmbeddedModelBuilder builder() const {
        return [this](double cs) {
            EmbeddedModel em = embed_model(model, embedding, topo, ChainStrength(cs));
            if (autoscale_on) autoscale_embedded(em);
            return em;
        };
    }
};

SamplerFn make_backend(const std::string& backend, double beta, int sweeps, double beta_hot,
                       double beta_cold, int threads) {
    if (backend == "gibbs") return make_gibbs_sampler(beta);
    if (backend == "sa") {
        SamplerConfig config;
        config.sweeps = sweeps;
        config.beta_hot = beta_hot;
        config.beta_cold = beta_cold;
        config.threads = threads;
        return make_sa_sampler(config);
    }
    throw std::invalid_argument("backend must be gibbs or sa");
}

void run_scan(const ScanArgs& args) {
    EmbeddedPipeline pipeline;
    pipeline.model = model_from_json(load_json(args.model));
    pipeline.embedding = embedding_from_json(load_json(args.embedding));
    pipeline.topo = topology_from_json(load_json(args.topo));
    pipeline.autoscale_on = !args.no_autoscale;

    std::vector<double> cs_values;
    if (!args.cs_list.empty()) {
        cs_values = parse_double_list(args.cs_list);
    } else if (args.cs_max > args.cs_min && args.cs_min > 0.0 && args.cs_points >= 2) {
        for (int i = 0; i < args.cs_points; ++i) {
            cs_values.push_back(args.cs_min + (args.cs_max - args.cs_min) * i /
                                                  (args.cs_points - 1));
        }
    } else {
        throw std::invalid_argument("scan: give --cs-list or --cs-min/--cs-max/--cs-points");
    }

    SamplerFn sampler = make_backend(args.backend, args.beta, args.sweeps, args.beta_hot,
                                     args.beta_cold, args.threads);
    std::vector<ScanRecord> records = chain_scan(pipeline.builder(), sampler, cs_values,
                                                 args.shots, pipeline.model.graph, args.seed);
    write_text(args.out, scan_csv(records));

    Manifest manifest;
    manifest.command = "scan";
    manifest.parameters = {{"cs", args.cs_list},   {"cs_min", args.cs_min},
                           {"cs_max", args.cs_max}, {"cs_points", args.cs_points},
                           {"shots", args.shots},  {"seed", args.seed},
                           {"backend", args.backend}, {"sweeps", args.sweeps},
                           {"beta_hot", args.beta_hot}, {"beta_cold", args.beta_cold},
                           {"threads", args.threads}, {"autoscale", !args.no_autoscale}};
    manifest.add_input("model", args.model);
    manifest.add_input("embedding", args.embedding);
    manifest.add_input("topology", args.topo);
    manifest.write_for(args.out);

    if (args.plateau_tol >= 0.0) {
        json j;
        j["plateau_cs"] = plateau_detect(records, args.plateau_tol);
        std::cout << j.dump(2) << "\n";
    }
}

struct TuneArgs {
    std::string model;
    std::string embedding;
    std::string topo;
    double cb_lo = 0.0;
    double cb_hi = 0.0;
    double cs_lo = 0.0;
    double cs_hi = 0.0;
    bool cs_given = false;
    std::int64_t shots_per_step = 128;
    double width_tol = 0.0;
    int max_steps = 30;
    std::uint64_t seed = 0;
    std::string backend = "sa";
    double beta = 1.0;
    int sweeps = 128;
    double beta_hot = 0.1;
    double beta_cold = 10.0;
    int threads = 1;
    bool no_autoscale = false;
    std::string out;
    std::string result_out;
};

void run_tune(const TuneArgs& args) {
    EmbeddedPipeline pipeline;
    pipeline.model = model_from_json(load_json(args.model));
    pipeline.embedding = embedding_from_json(load_json(args.embedding));
    pipeline.topo = topology_from_json(load_json(args.topo));
    pipeline.autoscale_on = !args.no_autoscale;

    TunerConfig config;
    config.cb_interval = {args.cb_lo, args.cb_hi};
    if (args.cs_given) config.cs_interval = {{args.cs_lo, args.cs_hi}};
    config.shots_per_step = args.shots_per_step;
    config.width_tol = args.width_tol;
    config.max_steps = args.max_steps;
    config.seed = args.seed;

    SamplerFn sampler = make_backend(args.backend, args.beta, args.sweeps, args.beta_hot,
                                     args.beta_cold, args.threads);
    TunerTrace trace =
        binary_search_chain_strength(pipeline.builder(), sampler, config, &pipeline.model);

    Manifest manifest;
    manifest.command = "tune";
    manifest.parameters = {{"cb_lo", args.cb_lo},   {"cb_hi", args.cb_hi},
                           {"cs_lo", args.cs_lo},   {"cs_hi", args.cs_hi},
                           {"cs_given", args.cs_given},
                           {"shots_per_step", args.shots_per_step},
                           {"width_tol", args.width_tol}, {"max_steps", args.max_steps},
                           {"seed", args.seed},     {"backend", args.backend},
                           {"sweeps", args.sweeps}, {"beta_hot", args.beta_hot},
                           {"beta_cold", args.beta_cold}, {"threads", args.threads},
                           {"autoscale", !args.no_autoscale}};
    manifest.add_input("model", args.model);
    manifest.add_input("embedding", args.embedding);
    manifest.add_input("topology", args.topo);

    if (!args.out.empty()) {
        write_text(args.out, trace_csv(trace));
        manifest.write_for(args.out);
    }
    json result;
    result["final_cs"] = trace.final_cs;
    result["converged"] = trace.converged;
    result["steps"] = trace.steps.size();
    result["initial_lo"] = trace.initial_interval.first;
    result["initial_hi"] = trace.initial_interval.second;
    if (!args.result_out.empty()) {
        save_json(args.result_out, result);
        manifest.write_for(args.result_out);
    }
    if (args.out.empty() && args.result_out.empty()) {
        std::cout << result.dump(2) << "\n";
    }
}

struct StatsArgs {
    std::string embedding;
    std::string model;
    std::string topo;
    std::string samples;
    double cs = 1.0;
    std::string cmr;
    std::string cme;
    std::string out;
};

void run_stats_chains(const StatsArgs& args) {
    Embedding e = embedding_from_json(load_json(args.embedding));
    ChainLengthHistogram hist = chain_length_histogram(e);
    std::ostringstream csv;
    csv << "length,count\n";
    for (const auto& [length, count] : hist.counts) csv << length << "," << count << "\n";
    if (args.out.empty()) {
        std::cout << csv.str();
        std::cout << "total_qubits," << hist.total_qubits << "\n";
    } else {
        write_text(args.out, csv.str());
        Manifest manifest;
        manifest.command = "stats chains";
        manifest.parameters = {{"total_qubits", hist.total_qubits}};
        manifest.add_input("embedding", args.embedding);
        manifest.write_for(args.out);
    }
}

void run_stats_corruption(const StatsArgs& args) {
    IsingModel model = model_from_json(load_json(args.model));
    Embedding e = embedding_from_json(load_json(args.embedding));
    Topology topo = topology_from_json(load_json(args.topo));
    ChainStrength strength = !e.strength.empty() ? e.strength : ChainStrength(args.cs);
    EmbeddedModel em = embed_model(model, e, topo, strength);
    SampleSet ss = sampleset_from_json(load_json(args.samples));

    CorruptionStats stats = coupler_corruption_stats(ss, em);
    json j;
    j["avg_break_rate"] = avg_chain_break_rate(ss, em);
    j["mean_count"] = stats.mean_count;
    j["median_count"] = stats.median_count;
    j["distinct_corrupted"] = stats.distinct_corrupted;
    json simultaneous = json::object();
    for (const auto& [count, occurrences] : stats.simultaneous) {
        simultaneous[std::to_string(count)] = occurrences;
    }
    j["simultaneous"] = simultaneous;
    j["per_edge_counts"] = stats.per_edge_counts;

    if (args.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        save_json(args.out, j);
        Manifest manifest;
        manifest.command = "stats corruption";
        manifest.parameters = {{"cs", args.cs}};
        manifest.add_input("model", args.model);
        manifest.add_input("embedding", args.embedding);
        manifest.add_input("topology", args.topo);
        manifest.add_input("samples", args.samples);
        manifest.write_for(args.out);
    }
}

void run_stats_remb(const StatsArgs& args) {
    std::vector<int> cmr = load_json(args.cmr).get<std::vector<int>>();
    std::vector<int> cme = load_json(args.cme).get<std::vector<int>>();
    json j;
    j["r_emb"] = embedding_ratio(cmr, cme);
    if (args.out.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        save_json(args.out, j);
        Manifest manifest;
        manifest.command = "stats remb";
        manifest.add_input("cmr", args.cmr);
        manifest.add_input("cme", args.cme);
        manifest.write_for(args.out);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chaingauge: chain-strength toolkit for minor-embedded Ising problems"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    GenArgs gen_args;
    CLI::App* gen = app.add_subcommand("gen", "Generate random graphs and max-cut models");
    gen->add_option("--type", gen_args.type, "er | dreg")->required();
    gen->add_option("--n", gen_args.n, "vertex count")->required();
    gen->add_option("--p", gen_args.p, "edge probability (er)");
    gen->add_option("--d", gen_args.d, "degree (dreg)");
    gen->add_option("--seed", gen_args.seed, "generator seed");
    gen->add_flag("--maxcut", gen_args.maxcut, "emit a max-cut model instead of a bare graph");
    gen->add_option("-o,--out", gen_args.out, "output JSON path")->required();
    gen->callback([&] { run_gen(gen_args); });

    TopoArgs topo_args;
    CLI::App* topo = app.add_subcommand("topo", "Generate or edit hardware topologies");
    topo->add_option("--m", topo_args.m, "chimera grid size");
    topo->add_option("--l", topo_args.l, "chimera shore size");
    topo->add_option("--in", topo_args.in, "load an existing topology JSON");
    topo->add_option("--remove", topo_args.remove_list, "comma-separated dead qubit ids");
    topo->add_option("-o,--out", topo_args.out, "output JSON path")->required();
    topo->callback([&] { run_topo(topo_args); });

    EmbedArgs embed_args;
    CLI::App* embed = app.add_subcommand("embed", "Find, build or validate embeddings");
    embed->add_option("--method", embed_args.method, "greedy | clique | validate")->required();
    embed->add_option("--graph", embed_args.graph, "source graph JSON");
    embed->add_option("--topo", embed_args.topo, "target topology JSON");
    embed->add_option("--embedding", embed_args.embedding, "embedding JSON (validate)");
    embed->add_option("--m", embed_args.m, "chimera grid size (clique)");
    embed->add_option("--seed", embed_args.seed, "embedder seed");
    embed->add_option("--max-tries", embed_args.max_tries, "greedy retry budget");
    embed->add_option("--budget", embed_args.budget, "physical qubit budget (0 = unlimited)");
    embed->add_option("-o,--out", embed_args.out, "output path");
    embed->add_option("--topo-out", embed_args.topo_out, "also write the implied topology");
    embed->callback([&] { run_embed(embed_args); });

    BoundsArgs bounds_args;
    CLI::App* bounds = app.add_subcommand("bounds", "Closed-form chain-strength prescriptions");
    bounds->add_option("--method", bounds_args.method, "choi | torque | raymond")->required();
    bounds->add_option("--model", bounds_args.model, "model JSON")->required();
    bounds->add_option("--prefactor", bounds_args.prefactor, "torque prefactor");
    bounds->add_option("--lambda0", bounds_args.lambda0, "raymond lambda0");
    bounds->add_option("-o,--out", bounds_args.out, "output JSON path");
    bounds->callback([&] { run_bounds(bounds_args); });

    GapArgs gap_args;
    CLI::App* gap = app.add_subcommand("gap", "Exact-diagonalization gap analysis");
    gap->add_option("--model", gap_args.model, "model JSON")->required();
    gap->add_option("--schedule", gap_args.schedule, "schedule CSV (s,a,b); default linear");
    gap->add_option("--points", gap_args.points, "annealing grid points");
    gap->add_option("--k", gap_args.k, "tracked levels");
    gap->add_flag("--refine", gap_args.refine, "golden-section refinement of the minimum");
    gap->add_option("--degeneracy-tol", gap_args.degeneracy_tol, "degeneracy tolerance");
    gap->add_option("-o,--out", gap_args.out, "profile CSV path");
    gap->add_option("--min-gap", gap_args.min_gap_out, "minimum-gap summary JSON path");
    gap->add_option("--rescale-check", gap_args.rescale_alpha,
                    "verify the coupler-rescaling identity at this alpha");
    gap->add_option("--rescale-out", gap_args.rescale_out, "rescale report JSON path");
    gap->callback([&] { run_gap(gap_args); });

    SampleArgs sample_args;
    CLI::App* sample = app.add_subcommand("sample", "Run a sampler or replay stored samples");
    sample->add_option("--backend", sample_args.backend, "gibbs | sa | replay")->required();
    sample->add_option("--model", sample_args.model, "model JSON");
    sample->add_option("--embedding", sample_args.embedding, "embedding JSON (sample embedded)");
    sample->add_option("--topo", sample_args.topo, "topology JSON (sample embedded)");
    sample->add_option("--cs", sample_args.cs, "chain strength magnitude");
    sample->add_flag("--no-autoscale", sample_args.no_autoscale, "skip weight auto-scaling");
    sample->add_option("--shots", sample_args.shots, "shot count");
    sample->add_option("--seed", sample_args.seed, "sampler seed");
    sample->add_option("--beta", sample_args.beta, "Gibbs inverse temperature");
    sample->add_option("--sweeps", sample_args.sweeps, "SA sweeps per shot");
    sample->add_option("--beta-hot", sample_args.beta_hot, "SA ladder start");
    sample->add_option("--beta-cold", sample_args.beta_cold, "SA ladder end");
    sample->add_option("--threads", sample_args.threads, "worker threads");
    sample->add_option("--in", sample_args.in, "replay input JSON");
    sample->add_option("-o,--out", sample_args.out, "output SampleSet JSON");
    sample->callback([&] { run_sample(sample_args); });

    ScanArgs scan_args;
    CLI::App* scan = app.add_subcommand("scan", "Chain scan over a list of chain strengths");
    scan->add_option("--model", scan_args.model, "model JSON")->required();
    scan->add_option("--embedding", scan_args.embedding, "embedding JSON")->required();
    scan->add_option("--topo", scan_args.topo, "topology JSON")->required();
    scan->add_option("--cs-list", scan_args.cs_list, "comma-separated magnitudes");
    scan->add_option("--cs-min", scan_args.cs_min, "scan range start");
    scan->add_option("--cs-max", scan_args.cs_max, "scan range end");
    scan->add_option("--cs-points", scan_args.cs_points, "scan range points");
    scan->add_option("--shots", scan_args.shots, "shots per scan point");
    scan->add_option("--seed", scan_args.seed, "sampler seed");
    scan->add_option("--backend", scan_args.backend, "sa | gibbs");
    scan->add_option("--beta", scan_args.beta, "Gibbs inverse temperature");
    scan->add_option("--sweeps", scan_args.sweeps, "SA sweeps per shot");
    scan->add_option("--beta-hot", scan_args.beta_hot, "SA ladder start");
    scan->add_option("--beta-cold", scan_args.beta_cold, "SA ladder end");
    scan->add_option("--threads", scan_args.threads, "worker threads");
    scan->add_flag("--no-autoscale", scan_args.no_autoscale, "skip weight auto-scaling");
    scan->add_option("--plateau-tol", scan_args.plateau_tol,
                     "also report the plateau cs at this relative tolerance");
    scan->add_option("-o,--out", scan_args.out, "scan CSV path")->required();
    scan->callback([&] { run_scan(scan_args); });

    TuneArgs tune_args;
    CLI::App* tune = app.add_subcommand("tune", "Binary-search chain-strength tuner");
    tune->add_option("--model", tune_args.model, "model JSON")->required();
    tune->add_option("--embedding", tune_args.embedding, "embedding JSON")->required();
    tune->add_option("--topo", tune_args.topo, "topology JSON")->required();
    tune->add_option("--cb-lo", tune_args.cb_lo, "break-rate window lower bound")->required();
    tune->add_option("--cb-hi", tune_args.cb_hi, "break-rate window upper bound")->required();
    CLI::Option* cs_lo =
        tune->add_option("--cs-lo", tune_args.cs_lo, "chain-strength interval lower bound");
    CLI::Option* cs_hi =
        tune->add_option("--cs-hi", tune_args.cs_hi, "chain-strength interval upper bound");
    cs_lo->needs(cs_hi);
    cs_hi->needs(cs_lo);
    tune->add_option("--shots-per-step", tune_args.shots_per_step, "shots per search step");
    tune->add_option("--width-tol", tune_args.width_tol,
                     "interval width stop (0 = 1e-3 of the initial width)");
    tune->add_option("--max-steps", tune_args.max_steps, "step budget");
    tune->add_option("--seed", tune_args.seed, "sampler seed");
    tune->add_option("--backend", tune_args.backend, "sa | gibbs");
    tune->add_option("--beta", tune_args.beta, "Gibbs inverse temperature");
    tune->add_option("--sweeps", tune_args.sweeps, "SA sweeps per shot");
    tune->add_option("--beta-hot", tune_args.beta_hot, "SA ladder start");
    tune->add_option("--beta-cold", tune_args.beta_cold, "SA ladder end");
    tune->add_option("--threads", tune_args.threads, "worker threads");
    tune->add_flag("--no-autoscale", tune_args.no_autoscale, "skip weight auto-scaling");
    tune->add_option("-o,--out", tune_args.out, "trace CSV path");
    tune->add_option("--result", tune_args.result_out, "result JSON path");
    tune->callback([&] {
        tune_args.cs_given = cs_lo->count() > 0;
        run_tune(tune_args);
    });

    StatsArgs stats_args;
    CLI::App* stats = app.add_subcommand("stats", "Embedding and chain-break statistics");
    stats->require_subcommand(1);
    CLI::App* chains = stats->add_subcommand("chains", "Chain-length histogram");
    chains->add_option("--embedding", stats_args.embedding, "embedding JSON")->required();
    chains->add_option("-o,--out", stats_args.out, "histogram CSV path");
    chains->callback([&] { run_stats_chains(stats_args); });

    CLI::App* corruption = stats->add_subcommand("corruption", "Corrupted-coupler statistics");
    corruption->add_option("--model", stats_args.model, "model JSON")->required();
    corruption->add_option("--embedding", stats_args.embedding, "embedding JSON")->required();
    corruption->add_option("--topo", stats_args.topo, "topology JSON")->required();
    corruption->add_option("--samples", stats_args.samples, "SampleSet JSON")->required();
    corruption->add_option("--cs", stats_args.cs, "chain strength if absent from embedding");
    corruption->add_option("-o,--out", stats_args.out, "output JSON path");
    corruption->callback([&] { run_stats_corruption(stats_args); });

    CLI::App* remb = stats->add_subcommand("remb", "Qubit-count ratio between embedders");
    remb->add_option("--cmr", stats_args.cmr, "JSON array of qubit counts")->required();
    remb->add_option("--cme", stats_args.cme, "JSON array of qubit counts")->required();
    remb->add_option("-o,--out", stats_args.out, "output JSON path");
    remb->callback([&] { run_stats_remb(stats_args); });

    try {
        app.parse(argc, argv);
        return 0;
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
