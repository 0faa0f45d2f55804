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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "phocs/pauli.hpp"

namespace phocs {

enum class OpKind { Alloc, Free, Gate, Exp, Measure, Rand, Cond, Rot };

/// Paulis are indexed by qubit label; a circuit has `num_labels` labels in total.
struct Instruction {
    OpKind kind = OpKind::Gate;
    /// Gate name for Gate.
    std::string name;
    /// Labels for Alloc, Free and Gate.
    std::vector<size_t> qubits;
    /// Exp sign.
    int sign = 1;
    PauliOperator pauli;
    std::optional<PauliOperator> hint;
    /// Cond: outcome indices and angle indices whose parity is compared to `parity`.
    std::vector<size_t> outcomes;
    std::vector<size_t> angles;
    bool parity = true;
    /// Rot: index into the angle registry.
    size_t angle = 0;
    size_t line = 0;
};

struct Circuit {
    /// Labels 0..declared-1 are allocated by the `qubits` header.
    size_t declared = 0;
    size_t num_labels = 0;
    std::vector<size_t> inputs;
    std::vector<Instruction> ops;
    /// Angle labels in first-appearance order.
    std::vector<std::string> angles;
    size_t num_outcomes = 0;

    size_t num_angles() const noexcept {
        return angles.size();
    }
    bool has_rotations() const;
    /// Labels live after the last instruction, ascending.
    std::vector<size_t> output_labels() const;
};

Circuit parse_circuit(std::string_view text);
std::string print_circuit(const Circuit &c);

/// Replaces each ROT by a Pauli conditioned on its angle bit.
Circuit lower_rotations(const Circuit &c);

/// Prepares each input qubit half of a Bell pair with a fresh reference qubit.
/// References take labels 0..k-1; other labels shift up by k.
Circuit choi_closure(const Circuit &c);

}  // namespace phocs
