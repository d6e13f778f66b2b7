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

#include "chaingauge/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "chaingauge/bounds.hpp"
#include "chaingauge/errors.hpp"

namespace chaingauge {

Schedule Schedule::linear() {
    return from_points({0.0, 1.0}, {1.0, 0.0}, {0.0, 1.0});
}

Schedule Schedule::from_points(std::vector<double> s, std::vector<double> a,
                               std::vector<double> b) {
    if (s.size() < 2 || s.size() != a.size() || s.size() != b.size()) {
        throw std::invalid_argument("Schedule: need >= 2 points with matching columns");
    }
    if (s.front() != 0.0 || s.back() != 1.0) {
        throw std::invalid_argument("Schedule: grid must start at s=0 and end at s=1");
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i] > s[i - 1])) {
            throw std::invalid_argument("Schedule: s must be strictly increasing");
        }
    }
    Schedule sched;
    sched.s_ = std::move(s);
    sched.a_ = std::move(a);
    sched.b_ = std::move(b);
    return sched;
}

static double interpolate(const std::vector<double>& xs, const std::vector<double>& ys,
                          double x) {
    if (x <= xs.front()) return ys.front();
    if (x >= xs.back()) return ys.back();
    auto it = std::upper_bound(xs.begin(), xs.end(), x);
    std::size_t hi = static_cast<std::size_t>(it - xs.begin());
    std::size_t lo = hi - 1;
    double t = (x - xs[lo]) / (xs[hi] - xs[lo]);
    return ys[lo] + t * (ys[hi] - ys[lo]);
}

double Schedule::a(double s) const { return interpolate(s_, a_, s); }
double Schedule::b(double s) const { return interpolate(s_, b_, s); }

// Classical energy of the basis state whose bit i encodes the spin of
// vertex i (bit 0 means +1).
static double basis_energy(const IsingModel& model, std::uint64_t state) {
    double total = 0.0;
    const int n = model.graph.num_vertices();
    for (int v = 0; v < n; ++v) {
        double spin = (state >> v) & 1ULL ? -1.0 : 1.0;
        total += model.h[static_cast<std::size_t>(v)] * spin;
    }
    const auto& edges = model.graph.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        double su = (state >> edges[i].first) & 1ULL ? -1.0 : 1.0;
        double sv = (state >> edges[i].second) & 1ULL ? -1.0 : 1.0;
        total += model.j[i] * su * sv;
    }
    return total;
}

Eigen::MatrixXd build_hamiltonian(const IsingModel& model, double s, const Schedule& schedule,
                                  int qubit_cap) {
    const int n = model.graph.num_vertices();
    if (n > qubit_cap) {
        throw resource_limit_error("build_hamiltonian: " + std::to_string(n) +
                                   " qubits exceeds cap " + std::to_string(qubit_cap));
    }
    if (s < 0.0 || s > 1.0) {
        throw std::invalid_argument("build_hamiltonian: s must lie in [0,1]");
    }
    const std::int64_t dim = std::int64_t{1} << n;
    const double a_val = schedule.a(s);
    const double b_val = schedule.b(s);

    Eigen::MatrixXd hmat = Eigen::MatrixXd::Zero(dim, dim);
    for (std::int64_t state = 0; state < dim; ++state) {
        hmat(state, state) = b_val * basis_energy(model, static_cast<std::uint64_t>(state));
        for (int i = 0; i < n; ++i) {
            hmat(state ^ (std::int64_t{1} << i), state) = -a_val;
        }
    }
    return hmat;
}

GapProfile gap_profile(const IsingModel& model, const Schedule& schedule, int grid_points,
                       int k, int qubit_cap) {
    if (grid_points < 2) throw std::invalid_argument("gap_profile: need >= 2 grid points");
    if (k < 1) throw std::invalid_argument("gap_profile: need k >= 1");
    const std::int64_t dim = std::int64_t{1} << model.graph.num_vertices();
    const int levels = static_cast<int>(std::min<std::int64_t>(k, dim));

    GapProfile profile;
    profile.k = levels;
    profile.s.reserve(static_cast<std::size_t>(grid_points));
    profile.levels.reserve(static_cast<std::size_t>(grid_points));
    for (int i = 0; i < grid_points; ++i) {
        double s = static_cast<double>(i) / static_cast<double>(grid_points - 1);
        Eigen::MatrixXd hmat = build_hamiltonian(model, s, schedule, qubit_cap);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hmat, Eigen::EigenvaluesOnly);
        if (solver.info() != Eigen::Success) {
            throw std::runtime_error("gap_profile: eigendecomposition failed");
        }
        std::vector<double> point(static_cast<std::size_t>(levels));
        for (int e = 0; e < levels; ++e) point[static_cast<std::size_t>(e)] = solver.eigenvalues()[e];
        profile.s.push_back(s);
        profile.levels.push_back(std::move(point));
    }
    return profile;
}

MinGapResult min_gap(const GapProfile& profile, double degeneracy_tol) {
    if (profile.s.empty() || profile.k < 2) {
        throw std::invalid_argument("min_gap: profile must track at least two levels");
    }
    MinGapResult result;
    result.gap = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < profile.s.size(); ++i) {
        double gap = profile.levels[i][1] - profile.levels[i][0];
        if (gap < result.gap) {
            result.gap = gap;
            result.s_star = profile.s[i];
        }
    }
    const std::vector<double>& final_levels = profile.levels.back();
    result.degenerate = (final_levels[1] - final_levels[0]) < degeneracy_tol;
    result.gap_above_degenerate = result.gap;
    if (result.degenerate) {
        // first tracked level above the degenerate classical ground energy
        int above = 1;
        while (above < profile.k &&
               final_levels[static_cast<std::size_t>(above)] - final_levels[0] < degeneracy_tol) {
            ++above;
        }
        if (above >= profile.k) {
            result.gap_above_degenerate = std::numeric_limits<double>::quiet_NaN();
        } else {
            double secondary = std::numeric_limits<double>::infinity();
            for (const auto& point : profile.levels) {
                secondary = std::min(secondary,
                                     point[static_cast<std::size_t>(above)] - point[0]);
            }
            result.gap_above_degenerate = secondary;
        }
    }
    return result;
}

MinGapResult min_gap_refined(const IsingModel& model, const Schedule& schedule,
                             const GapProfile& profile, double degeneracy_tol, double s_tol,
                             int qubit_cap) {
    MinGapResult result = min_gap(profile, degeneracy_tol);

    std::size_t best_index = 0;
    for (std::size_t i = 0; i < profile.s.size(); ++i) {
        if (profile.s[i] == result.s_star) {
            best_index = i;
            break;
        }
    }
    double lo = profile.s[best_index == 0 ? 0 : best_index - 1];
    double hi = profile.s[std::min(best_index + 1, profile.s.size() - 1)];

    auto gap_at = [&](double s) {
        Eigen::MatrixXd hmat = build_hamiltonian(model, s, schedule, qubit_cap);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hmat, Eigen::EigenvaluesOnly);
        return solver.eigenvalues()[1] - solver.eigenvalues()[0];
    };

    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double gap_c = gap_at(c);
    double gap_d = gap_at(d);
    while (hi - lo > s_tol) {
        if (gap_c < gap_d) {
            hi = d;
            d = c;
            gap_d = gap_c;
            c = hi - ratio * (hi - lo);
            gap_c = gap_at(c);
        } else {
            lo = c;
            c = d;
            gap_c = gap_d;
            d = lo + ratio * (hi - lo);
            gap_d = gap_at(d);
        }
    }
    double s_mid = 0.5 * (lo + hi);
    double gap_mid = gap_at(s_mid);
    if (gap_mid < result.gap) {
        result.gap = gap_mid;
        result.s_star = s_mid;
    }
    return result;
}

IsingModel rescale_model(const IsingModel& model, double alpha) {
    if (!(alpha > 0.0)) throw std::invalid_argument("rescale_model: alpha must be > 0");
    IsingModel out = model;
    for (double& v : out.h) v /= alpha;
    for (double& v : out.j) v /= alpha;
    return out;
}

RescalePoint rescaling_correspondence(double s2, double alpha) {
    if (s2 < 0.0 || s2 > 1.0) {
        throw std::invalid_argument("rescaling_correspondence: s2 must lie in [0,1]");
    }
    if (!(alpha > 0.0)) {
        throw std::invalid_argument("rescaling_correspondence: alpha must be > 0");
    }
    RescalePoint point;
    point.s1 = s2 / ((alpha - 1.0) * (1.0 - s2) + 1.0);
    point.factor = 1.0 + (1.0 / alpha - 1.0) * s2;
    return point;
}

GroundStates brute_force_ground(const IsingModel& model) {
    const int n = model.graph.num_vertices();
    if (n > kBruteForceCap) {
        throw resource_limit_error("brute_force_ground: " + std::to_string(n) +
                                   " vertices exceeds cap " + std::to_string(kBruteForceCap));
    }
    const std::uint64_t count = std::uint64_t{1} << n;
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::uint64_t> arg;
    for (std::uint64_t state = 0; state < count; ++state) {
        double e = basis_energy(model, state);
        if (e < best) {
            best = e;
            arg.assign(1, state);
        } else if (e == best) {
            arg.push_back(state);
        }
    }
    GroundStates out;
    out.energy = best;
    out.minimizers.reserve(arg.size());
    for (std::uint64_t state : arg) {
        Assignment a(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            a[static_cast<std::size_t>(v)] = (state >> v) & 1ULL ? -1 : 1;
        }
        out.minimizers.push_back(std::move(a));
    }
    return out;
}

double min_maintaining_strength(const IsingModel& model, const Embedding& e,
                                const Topology& target, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("min_maintaining_strength: tol must be > 0");
    if (e.total_qubits() > kBruteForceCap) {
        throw resource_limit_error("min_maintaining_strength: embedded size exceeds cap");
    }

    auto maintained_at = [&](double f) {
        EmbeddedModel em = embed_model(model, e, target, ChainStrength(f));
        GroundStates gs = brute_force_ground(em.physical);
        for (const Assignment& a : gs.minimizers) {
            if (chain_break_rate(a, em) > 0.0) return false;
        }
        return true;
    };

    // Embeddings with no intra-chain couplers have nothing to maintain.
    {
        EmbeddedModel probe = embed_model(model, e, target, ChainStrength(1.0));
        if (probe.ferro_edges.empty()) return 0.0;
    }

    double hi = choi_bound_global(model).magnitude + 1.0;
    if (!maintained_at(hi)) {
        throw bracket_exhausted_error(
            "min_maintaining_strength: bracket [0, choi+1] never maintains all chains");
    }
    double lo = 0.0;
    while (hi - lo > tol) {
        double mid = 0.5 * (lo + hi);
        if (maintained_at(mid)) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return hi;
}

}  // namespace chaingauge
