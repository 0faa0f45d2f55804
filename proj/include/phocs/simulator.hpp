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

#include "phocs/circuit.hpp"
#include "phocs/general_form.hpp"

namespace phocs {

/// Outcome-complete simulation of a circuit without inputs. Output qubits are
/// the live labels at the end, ascending.
GeneralForm simulate(const Circuit &c);

struct MeasurementBranches {
    /// Index by outcome.
    BasisImageState branch[2];
};

/// Both normalized post-measurement states of measuring `p` on a state that
/// `hint` stabilizes up to sign, with `hint` anticommuting with `p`.
MeasurementBranches measure_with_assertion(const BasisImageState &st, const PauliOperator &p,
                                           const PauliOperator &hint);

struct Separation {
    GeneralForm out;
    GeneralForm aux;
    ExactScalar scalar;
};

/// Splits the family into the first n_out qubits and the rest. Fails with
/// ResidualEntanglement when the two parts are entangled.
Separation separate_aux(const GeneralForm &g, size_t n_out);

}  // namespace phocs
