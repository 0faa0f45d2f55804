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

#include <vector>

#include "phocs/circuit.hpp"
#include "phocs/dense.hpp"

namespace phocs {

struct DenseRun {
    /// Output qubits in ascending label order.
    DenseState state;
    BitVector outcomes;
    /// Number of probability-1/2 branchings taken.
    size_t weight = 0;
};

/// Executes the circuit densely. `assignment` holds the angle bits followed by
/// the full outcome vector; deterministic outcomes must match it.
DenseRun run_dense(const Circuit &c, const BitVector &assignment);

struct DenseBranch {
    BitVector assignment;
    DenseRun run;
};

/// All assignments with nonzero probability.
std::vector<DenseBranch> enumerate_dense(const Circuit &c);

}  // namespace phocs
