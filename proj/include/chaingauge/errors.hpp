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
#include <stdexcept>
#include <string>

namespace chaingauge {

// Problem size exceeds a configured cap (dense diagonalization, brute force,
// exact Gibbs enumeration).
class resource_limit_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A randomized generator exhausted its retry budget.
class generation_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// greedy_embed gave up after max_tries attempts.
class embedding_not_found : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A replayed file failed a consistency cross-check.
class data_integrity_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A bisection bracket contained no admissible value.
class bracket_exhausted_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace chaingauge
