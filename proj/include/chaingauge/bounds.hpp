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
#include <map>

#include "chaingauge/ising.hpp"

namespace chaingauge {

// Closed-form chain-strength prescriptions. All results are magnitudes; the
// embedding module applies the ferromagnetic sign.
struct BoundResult {
    double magnitude = 0.0;
    std::map<int, double> per_node;
};

// |h_v| + sum over incident edges of |J_uv|. A chain strength with magnitude
// strictly above this keeps vertex v's chain intact in every ground state.
double choi_bound_node(const IsingModel& model, int v);

// Per-node bound for every vertex plus the maximum, which is sufficient for
// all chains at once.
BoundResult choi_bound_global(const IsingModel& model);

// prefactor * sqrt(average degree) * rms(J). The 1.414 default is the
// constant used by the uniform torque compensation method.
double torque_compensation(const IsingModel& model, double prefactor = 1.414);

// lambda0 * sqrt(sigma^2 * N) with sigma^2 = 2/(N(N-1)) * sum J^2 over edges,
// N the vertex count. lambda0 is an empirical knob supplied by the caller.
double raymond_lambda(const IsingModel& model, double lambda0);

}  // namespace chaingauge
