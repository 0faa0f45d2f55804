// Copyright 2026 The phocs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <random>
#include <string>
#include <vector>

namespace phocs {

struct RandomCircuitOptions {
    size_t max_qubits = 4;
    size_t max_instructions = 12;
    size_t max_measurements = 4;
    size_t max_conditions = 3;
    size_t max_rand = 2;
    size_t max_rotations = 0;
    /// Emits measure/reset/free/alloc sequences.
    bool allow_free = true;
    /// Adds explicit HINT operands where one is easy to derive.
    bool allow_hints = true;
};

/// Circuit text in the line format.
std::string random_circuit_text(std::mt19937_64 &rng, const RandomCircuitOptions &opt);

/// Random Hermitian non-identity Pauli over the given labels, e.g. "-X0*Z2".
std::string random_pauli_text(std::mt19937_64 &rng, const std::vector<size_t> &labels);

}  // namespace phocs
