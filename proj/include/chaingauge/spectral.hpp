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
#include <Eigen/Dense>
#include <vector>

#include "chaingauge/embedding.hpp"
#include "chaingauge/ising.hpp"

namespace chaingauge {

// Dense diagonalization cap: 2^12 = 4096-dimensional matrices by default.
inline constexpr int kDefaultQubitCap = 12;
// Exhaustive classical enumeration cap.
inline constexpr int kBruteForceCap = 24;

// Annealing schedule weights a(s), b(s) on a grid of s in [0,1], evaluated by
// linear interpolation. The total run time T only fixes the mapping s = t/T
// and plays no computational role here.
class Schedule {
public:
    // a(s) = 1-s, b(s) = s.
    static Schedule linear();
    // Grid must be strictly increasing with s=0 first and s=1 last.
    static Schedule from_points(std::vector<double> s, std::vector<double> a,
                                std::vector<double> b);

    double a(double s) const;
    double b(double s) const;
    const std::vector<double>& s_points() const { return s_; }
    const std::vector<double>& a_points() const { return a_; }
    const std::vector<double>& b_points() const { return b_; }

private:
    Schedule() = default;
    std::vector<double> s_, a_, b_;
};

// H(s) = a(s) * (-sum_i X_i) + b(s) * diag(classical energies) in the
// computational basis; bit i of the basis index 0 means spin +1 on vertex i.
// The mixer carries the minus sign so its ground state is the uniform
// superposition.
Eigen::MatrixXd build_hamiltonian(const IsingModel& model, double s, const Schedule& schedule,
                                  int qubit_cap = kDefaultQubitCap);

// Lowest-k eigenvalues per grid point, ascending within a point.
struct GapProfile {
    std::vector<double> s;
    std::vector<std::vector<double>> levels;
    int k = 2;
};

GapProfile gap_profile(const IsingModel& model, const Schedule& schedule, int grid_points,
                       int k = 2, int qubit_cap = kDefaultQubitCap);

struct MinGapResult {
    double gap = 0.0;
    double s_star = 0.0;
    bool degenerate = false;
    // For degenerate problems: minimum gap from the ground level to the first
    // level sitting above the (degenerate) classical ground energy. NaN when
    // the profile tracks too few levels to tell.
    double gap_above_degenerate = 0.0;
};

// Grid minimum of E_1(s) - E_0(s). Degeneracy is detected at s=1.
MinGapResult min_gap(const GapProfile& profile, double degeneracy_tol = 1e-9);

// Grid minimum plus golden-section refinement between the neighbors of the
// grid arg-min, re-diagonalizing at probe points.
MinGapResult min_gap_refined(const IsingModel& model, const Schedule& schedule,
                             const GapProfile& profile, double degeneracy_tol = 1e-9,
                             double s_tol = 1e-9, int qubit_cap = kDefaultQubitCap);

// Divides every weight by alpha (alpha > 0).
IsingModel rescale_model(const IsingModel& model, double alpha);

// The annealing-fraction correspondence induced by rescaling H_P by 1/alpha:
// diagonalizing the rescaled model at s2 matches the original spectrum at s1
// up to the returned factor.
struct RescalePoint {
    double s1 = 0.0;
    double factor = 1.0;
};

RescalePoint rescaling_correspondence(double s2, double alpha);

struct GroundStates {
    double energy = 0.0;
    std::vector<Assignment> minimizers;
};

// Exhaustive enumeration of all 2^n assignments; every minimizer is returned.
GroundStates brute_force_ground(const IsingModel& model);

// Smallest chain-strength magnitude, located by bisection over
// [0, choi_bound_global + 1], such that every brute-force ground state of the
// embedded model has zero broken chains. Embeddings without any intra-chain
// coupler need no strength at all and report 0.
double min_maintaining_strength(const IsingModel& model, const Embedding& e,
                                const Topology& target, double tol = 1e-4);

}  // namespace chaingauge
